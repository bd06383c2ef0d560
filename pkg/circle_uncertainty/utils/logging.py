"""Logging for the package"""
import logging
import sys
from ..config import RUN_FLAGS
from ..constants import LOG_FILE_NAME
from ..storage.state_file import get_home_dir


class CircleLogger:
    """Centralized logging for the package"""
    
    _logger = None
    _initialized = False
    
    @classmethod
    def get_logger(cls):
        """Get or create the package logger"""
        if not cls._initialized:
            cls._setup_logger()
        return cls._logger
    
    @classmethod
    def _setup_logger(cls):
        """Set up the logger with file and console handlers"""
        logger = logging.getLogger('circle_uncertainty')
        logger.setLevel(logging.DEBUG)
        logger.propagate = False
        
        # Prevent duplicate handlers
        if logger.handlers:
            cls._logger = logger
            cls._initialized = True
            return
        
        file_formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
        console_formatter = logging.Formatter(
            '%(levelname)s - %(message)s'
        )
        
        # File handler - logs everything
        try:
            log_dir = get_home_dir() / 'logs'
            log_dir.mkdir(parents=True, exist_ok=True)
            
            file_handler = logging.FileHandler(log_dir / LOG_FILE_NAME, encoding='utf-8')
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(file_formatter)
            logger.addHandler(file_handler)
        except (OSError, PermissionError) as e:
            sys.stderr.write(f"Warning: Could not create log file: {e}\n")
        
        # Console handler on stderr so command output stays clean
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(logging.ERROR if RUN_FLAGS['quiet'] else logging.WARNING)
        console_handler.setFormatter(console_formatter)
        logger.addHandler(console_handler)
        
        cls._logger = logger
        cls._initialized = True
    
    @classmethod
    def set_quiet(cls, quiet: bool):
        """Raise or restore the console threshold"""
        for handler in cls.get_logger().handlers:
            if not isinstance(handler, logging.FileHandler):
                handler.setLevel(logging.ERROR if quiet else logging.WARNING)
    
    @classmethod
    def debug(cls, message: str):
        cls.get_logger().debug(message)
    
    @classmethod
    def info(cls, message: str):
        cls.get_logger().info(message)
    
    @classmethod
    def warning(cls, message: str):
        cls.get_logger().warning(message)
    
    @classmethod
    def error(cls, message: str, exc_info=False):
        cls.get_logger().error(message, exc_info=exc_info)
    
    @classmethod
    def exception(cls, message: str):
        """Log exception with traceback"""
        cls.get_logger().exception(message)


# Convenience functions
def log_debug(message: str):
    CircleLogger.debug(message)


def log_info(message: str):
    CircleLogger.info(message)


def log_warning(message: str):
    CircleLogger.warning(message)


def log_error(message: str, exc_info=False):
    CircleLogger.error(message, exc_info=exc_info)


def log_exception(message: str):
    CircleLogger.exception(message)
