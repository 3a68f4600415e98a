import os
import sys
import logging
from logging.handlers import RotatingFileHandler

from stokes import ROOT_DIR

ROOT_LOGGER = 'stokes'

FORMAT = '[%(asctime)s] [%(name)s] [%(filename)s:%(lineno)d] [%(levelname)-4s] %(message)s'


class LoggerManager:
    """
    Owns the handlers of the ``stokes`` logger tree. Only one
    instance exists; the handlers are installed when it is first
    constructed. Records go to a rotating file in ``ROOT_DIR`` and,
    from WARNING up, to stderr.
    """

    __instance = None

    def __new__(cls, *args, **kwargs):
        if cls.__instance is None:
            cls.__instance = object.__new__(cls)
            cls.__instance._install(*args, **kwargs)
        return cls.__instance

    def _install(self, level: int = logging.DEBUG):
        self.logger = logging.getLogger(ROOT_LOGGER)
        full_path = os.path.join(ROOT_DIR, '{}.log'.format(ROOT_LOGGER))

        if not os.path.isdir(ROOT_DIR):
            os.makedirs(ROOT_DIR)

        try:
            self.file_handler = RotatingFileHandler(
                full_path,
                mode='a',
                maxBytes=10 * 1024 * 1024,
                backupCount=5
            )
        except OSError:
            raise IOError('Could not create/open file \'{}\''
                          .format(full_path))
        self.file_handler.setFormatter(logging.Formatter(fmt=FORMAT, datefmt='%F %H:%M:%S'))

        self.stderr_handler = logging.StreamHandler(sys.stderr)
        self.stderr_handler.setLevel(logging.WARNING)
        self.stderr_handler.setFormatter(logging.Formatter('%(name)s: %(message)s'))

        self.logger.setLevel(level)
        self.logger.addHandler(self.file_handler)
        self.logger.addHandler(self.stderr_handler)
        self.logger.propagate = False

    def get_logger(self, module: str = None) -> logging.Logger:
        """
        The logger of ``module`` (``growth``, ``words``, ...), a child
        of the ``stokes`` logger, or the ``stokes`` logger itself.
        """
        if module is None:
            return self.logger
        return self.logger.getChild(module)

    def set_level(self, level: int):
        self.logger.setLevel(level)
