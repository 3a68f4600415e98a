from stokes.logger.logger import Logger
from stokes.logger.logger_manager import LoggerManager
