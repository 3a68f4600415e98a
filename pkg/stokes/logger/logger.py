import logging

from stokes.logger.logger_manager import LoggerManager


class Logger:
    """
    Handle on the logger of one subpackage, e.g. ``Logger('growth')``
    logs as ``stokes.growth``.
    """

    def __init__(self, module: str = None):
        self._module = module
        self._lm = LoggerManager()

    def get_logger(self) -> logging.Logger:
        return self._lm.get_logger(self._module)

    def set_level(self, level: int):
        self._lm.set_level(level)
