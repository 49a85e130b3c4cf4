from dataclasses import dataclass, fields, replace
from typing import Dict, Optional

from src.models.errors import ConfigError


@dataclass(frozen=True)
class Settings:
    '''
    Настраиваемые значения по умолчанию. Загружаются из lexseg.json,
    явные флаги командной строки их перекрывают.
    '''
    shadow_iterations: Optional[int] = None  # None означает n·d
    reduction_step_budget: int = 10 ** 6
    exhaustive_order_limit: int = 7
    exchange_bound: int = 2
    power_max: int = 3
    seed: int = 0
    workers: int = 1
    lemma_cases: int = 1000

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None and f.name == "shadow_iterations":
                continue
            if not isinstance(value, int) or isinstance(value, bool):
                raise ConfigError(f"Параметр {f.name} должен быть целым, получено {value!r}")
            if f.name != "seed" and value < 1:
                raise ConfigError(f"Параметр {f.name} должен быть положительным, получено {value}")

    @classmethod
    def from_dict(cls, data: Dict) -> 'Settings':
        """
        :raises ConfigError: Для неизвестных ключей или неверных значений.
        """
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"Неизвестные параметры: {', '.join(unknown)}")
        return cls(**data)

    def to_dict(self) -> Dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def override(self, **values) -> 'Settings':
        """Копия с заменой заданных (не None) значений."""
        return replace(self, **{k: v for k, v in values.items() if v is not None})
