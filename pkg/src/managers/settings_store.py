import os
import json
import logging
from abc import ABC, abstractmethod

from src.models.errors import ConfigError
from src.models.settings import Settings

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = "lexseg.json"


# Интерфейс хранилища настроек
class ISettingsStore(ABC):
    @abstractmethod
    def get_settings(self) -> Settings: ...

    @abstractmethod
    def set_settings(self, settings: Settings): ...

    @abstractmethod
    def save_settings(self): ...

    @abstractmethod
    def load_settings(self): ...


class SettingsStore(ISettingsStore):
    '''
    Хранит Settings в JSON-файле. Если файла нет, действуют значения по умолчанию.
    '''
    def __init__(self, file_path: str = DEFAULT_CONFIG):
        """
        :param file_path: Путь к файлу настроек. По умолчанию "lexseg.json".
        """
        self._settings = Settings()
        self._file_path = file_path
        self.load_settings()

    @property
    def file_path(self) -> str:
        return self._file_path

    def get_settings(self) -> Settings:
        return self._settings

    def set_settings(self, settings: Settings):
        self._settings = settings

    def save_settings(self):
        """
        Сохраняет настройки в файл в формате JSON.
        """
        with open(self._file_path, "w", encoding="utf-8") as file:
            json.dump(self._settings.to_dict(), file, ensure_ascii=False, indent=4)

    def load_settings(self):
        """
        Загружает настройки из файла JSON.

        :raises ConfigError: Если файл повреждён или содержит неизвестные параметры.
        """
        if not os.path.exists(self._file_path):
            return  # Файл не существует, остаются значения по умолчанию

        with open(self._file_path, "r", encoding="utf-8") as file:
            try:
                data = json.load(file)
            except json.JSONDecodeError as e:
                raise ConfigError(f"Файл {self._file_path} не является JSON: {e}") from e
        if not isinstance(data, dict):
            raise ConfigError(f"Файл {self._file_path} должен содержать объект JSON")
        self._settings = Settings.from_dict(data)
        logger.debug("Настройки загружены из %s", self._file_path)
