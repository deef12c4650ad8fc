import logging

_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
_ROOT = "DiophTools"


def get_logger(name):
    """
    @brief Returns a logger under the DiophTools namespace.

    The stream handler is attached once to the namespace root, so every
    module logger shares it. Output goes to stderr.
    """
    root = logging.getLogger(_ROOT)
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_FORMAT))
        root.addHandler(handler)
        root.setLevel(logging.WARNING)
        root.propagate = False
    if not name.startswith(_ROOT):
        name = f"{_ROOT}.{name}"
    return logging.getLogger(name)


def set_verbosity(level):
    """
    @brief Maps a -v count to a logging level (0 warning, 1 info, 2+ debug).
    """
    get_logger(_ROOT)
    levels = {0: logging.WARNING, 1: logging.INFO}
    logging.getLogger(_ROOT).setLevel(levels.get(level, logging.DEBUG))


def progress_enabled():
    """True when the namespace logger is at INFO or below; used to toggle tqdm bars."""
    return logging.getLogger(_ROOT).getEffectiveLevel() <= logging.INFO
