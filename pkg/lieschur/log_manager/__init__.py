from .log_manager import LogManager
