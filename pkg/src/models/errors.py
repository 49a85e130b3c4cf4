# Иерархия исключений библиотеки. Все ошибки наследуют ValueError,
# чтобы вызывающий код мог ловить их так же, как ошибки валидации модели.


class LexsegError(ValueError):
    """Базовая ошибка библиотеки."""


class DimensionError(LexsegError):
    """Несовпадение числа переменных, степени или длины вектора."""


class ExponentOverflowError(DimensionError):
    """Показатель вышел за допустимую границу при умножении."""


class OrderError(LexsegError):
    """Нарушено требование порядка (например, u <_lex v)."""


class UndefinedError(LexsegError):
    """Величина не определена (max/min у монома степени 0, предшественник x_n^d)."""


class ValidationError(LexsegError):
    """Некорректные строки таблицы, носитель или пустое множество."""


class PreconditionError(LexsegError):
    """Не выполнено предположение теоремы (например, x_1 не делит u)."""


class ReductionBudgetError(LexsegError):
    """Редукция S-пары превысила бюджет шагов."""


class KernelError(LexsegError):
    """Бином не лежит в ядре отображения представления."""


class ConfigError(LexsegError):
    """Ошибка файла настроек."""
