import logging
import sys

from colorama import Fore, Style, just_fix_windows_console

LEVEL_COLORS = {
    logging.DEBUG: Fore.CYAN,
    logging.INFO: Fore.GREEN,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.RED + Style.BRIGHT,
}


class ColorFormatter(logging.Formatter):
    '''
    Раскрашивает имя уровня, если вывод идёт в терминал.
    '''
    def __init__(self, fmt: str, use_color: bool):
        super().__init__(fmt)
        self._use_color = use_color

    def format(self, record: logging.LogRecord) -> str:
        if not self._use_color:
            return super().format(record)
        original = record.levelname
        record.levelname = f"{LEVEL_COLORS.get(record.levelno, '')}{original}{Style.RESET_ALL}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


def level_for(verbosity: int) -> int:
    """-q -> ERROR, по умолчанию WARNING, -v -> INFO, -vv -> DEBUG."""
    if verbosity < 0:
        return logging.ERROR
    return {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)


def setup_logging(verbosity: int = 0, stream=None) -> logging.Handler:
    """
    Настраивает корневой логгер один раз: записи уходят в stderr, данные в stdout.

    :param verbosity: Число флагов -v минус число флагов -q.
    :param stream: Поток для записей, по умолчанию sys.stderr.
    :return: Установленный обработчик.
    """
    stream = stream if stream is not None else sys.stderr
    just_fix_windows_console()
    handler = logging.StreamHandler(stream)
    use_color = hasattr(stream, "isatty") and stream.isatty()
    handler.setFormatter(ColorFormatter("%(levelname)s %(name)s: %(message)s", use_color))
    root = logging.getLogger()
    for old in list(root.handlers):
        if getattr(old, "_lexseg", False):
            root.removeHandler(old)
    handler._lexseg = True
    root.addHandler(handler)
    root.setLevel(level_for(verbosity))
    return handler


def mark(ok: bool, use_color: bool) -> str:
    """Маркер результата для текстового вывода."""
    text = "ok" if ok else "FAIL"
    if not use_color:
        return text
    color = Fore.GREEN if ok else Fore.RED
    return f"{color}{text}{Style.RESET_ALL}"
