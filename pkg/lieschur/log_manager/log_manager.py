import io
import os
import sys
import time
import atexit
import logging
import datetime
import traceback
import psutil
import pandas as pd
from line_profiler import LineProfiler
from functools import wraps
from typing import Optional, Any, Type, Callable, Tuple, Dict

from lieschur.parameter_config import ParameterConfig


class LogManager:
    """
    LogManager is a singleton class for managing and creating loggers across the package.
    """
    _instance = None

    def __new__(cls: Type['LogManager']) -> 'LogManager':
        """Create a new LogManager instance or return the existing one."""
        if not cls._instance:
            cls._instance = super(LogManager, cls).__new__(cls)
            cls._instance.config = ParameterConfig()
            cls._instance.logger_dict = {}
            cls._instance._handlers = {}
        return cls._instance

    def setup(self, *args, **kwargs) -> None:
        """Delegate the setup to the config object and rebuild existing loggers."""
        self.config.setup(*args, **kwargs)
        self.reset()

    def reset(self) -> None:
        """Detach every handler created so far; loggers are rebuilt lazily on next request."""
        for logname, logger in self.logger_dict.items():
            LogManager.close_log(logger, self._handlers.get(logname))
        self.logger_dict.clear()
        self._handlers.clear()

    def setup_check(func: Callable) -> Callable:
        """
        Decorator to ensure the log manager is set up before creating loggers.
        A missing setup falls back to the default configuration.
        Parameters:
            func (Callable): The function to wrap with the setup check.
        Returns:
            Callable: The wrapped function.
        """
        @wraps(func)
        def decorator(self, *args, **kwargs):
            if not self.config.is_setup:
                self.config.setup()
            return func(self, *args, **kwargs)
        return decorator

    @staticmethod
    def get_log_string(*args: Any, **kwargs: Any) -> str:
        """
        Convert logging arguments into a formatted string.
        Parameters:
            args: Arguments to be logged.
            kwargs: Keyword arguments controlling the formatting of the log string.
        Returns:
            str: The formatted log string.
        """
        modified_args = []
        for arg in args:
            if isinstance(arg, pd.DataFrame):
                spliter = "\n--------------------------------------\n"
                df_str = spliter + arg.to_string(max_rows=kwargs.get("max_rows", 20), max_cols=kwargs.get("max_cols", 12), max_colwidth=kwargs.get("max_colwidth", 35)) + spliter
                modified_args.append(df_str)
            elif isinstance(arg, dict):
                spliter = "\n- - - - - - - - - - - - - - - - - - - \n"
                rows = [{'key': k, 'value': v} for k, v in arg.items()]
                df_str = spliter + pd.DataFrame(rows).to_string(index=False, max_rows=kwargs.get("max_rows", 40), max_colwidth=kwargs.get("max_colwidth", 35)) + spliter
                modified_args.append(df_str)
            else:
                modified_args.append(str(arg))
        return ' '.join(modified_args)

    def log_file_cleaner(self) -> None:
        """
        Remove old log files based on the configured limits for file number and age.
        """
        log_dir = self.config.log_config.root_log_path
        num_limit = self.config.log_config.log_file_num_limit
        day_limit = self.config.log_config.log_file_day_limit

        if not log_dir or not os.path.exists(log_dir):
            return

        files = [os.path.join(log_dir, f) for f in os.listdir(log_dir) if f.endswith(".log") and os.path.isfile(os.path.join(log_dir, f))]
        files_to_delete = set()

        # Timestamped names sort chronologically within a logger name
        if num_limit is not None:
            files_sorted_by_mtime = sorted(files, key=os.path.getmtime, reverse=True)
            files_to_delete.update(files_sorted_by_mtime[num_limit:])

        if day_limit is not None:
            cutoff_date = datetime.datetime.now() - datetime.timedelta(days=day_limit)
            for file in files:
                if datetime.datetime.fromtimestamp(os.path.getmtime(file)) < cutoff_date:
                    files_to_delete.add(file)

        for file in sorted(files_to_delete):
            os.remove(file)

    @setup_check
    def create_logger(self, logname: str, log_level: int = logging.DEBUG, timestamp: bool = True) -> None:
        """
        Create a new logger with the configured handler.
        Parameters:
            logname (str): Name of the logger.
            log_level (int): Logging level of the logger itself.
            timestamp (bool): Whether to append a timestamp to the log file name.
        Returns:
            None: Logger is configured and stored in the logger dictionary.
        """
        log_config = self.config.log_config
        logger = logging.getLogger(logname)
        formatter = logging.Formatter('%(asctime)s-%(levelname)-8s-%(caller_func_name)-18s - %(message)s', datefmt='%Y-%m-%d %H:%M:%S')

        if log_config.root_log_path:
            os.makedirs(log_config.root_log_path, exist_ok=True)
            self.log_file_cleaner()
            time_stamp = datetime.datetime.now().strftime("%y%m%d_%H%M%S")
            filename = f"{logname}_{time_stamp}.log" if timestamp else f"{logname}.log"
            handler = logging.FileHandler(os.path.join(log_config.root_log_path, filename))
            handler.setLevel(log_level)
        else:
            handler = logging.StreamHandler(sys.stderr)
            handler.setLevel(log_config.console_level)
        handler.setFormatter(formatter)
        logger.addHandler(handler)
        logger.setLevel(log_level)

        def split_kwargs(**kwargs: Any) -> Tuple[Dict[str, Any], Dict[str, Any]]:
            log_kwargs = {key[5:]: value for key, value in kwargs.items() if key.startswith('_log_')}
            if "verbose" in kwargs:
                log_kwargs["verbose"] = kwargs["verbose"]
            other_kwargs = {key: value for key, value in kwargs.items() if not key.startswith('_log_') and key != "verbose"}
            return log_kwargs, other_kwargs

        def print_and_log(log_method: Callable, level: int, default_verbose: bool = True) -> Callable:
            @wraps(log_method)
            def wrapper(*args: Any, **kwargs: Any) -> Any:
                log_kwargs, remaining_kwargs = split_kwargs(**kwargs)
                verbose = log_kwargs.get("verbose", default_verbose)
                if not verbose and not logger.isEnabledFor(level):
                    return
                system_msg = log_kwargs.get("system_msg", None)
                func_name = sys._getframe(1).f_code.co_name if system_msg is None else system_msg
                msg = LogManager.get_log_string(*args, **log_kwargs)
                log_method(msg, extra={'caller_func_name': func_name}, **remaining_kwargs)
                if verbose:
                    # stdout carries command output
                    print(msg, file=sys.stderr)
            return wrapper

        logging_methods = {'info': logging.INFO, 'debug': logging.DEBUG, 'warning': logging.WARNING,
                           'error': logging.ERROR, 'critical': logging.CRITICAL}
        for method, level in logging_methods.items():
            original = getattr(logging.Logger, method).__get__(logger)
            setattr(logger, f'p{method}', print_and_log(original, level, default_verbose=True))
            setattr(logger, method, print_and_log(original, level, default_verbose=False))

        self.logger_dict[logname] = logger
        self._handlers[logname] = handler
        atexit.register(LogManager.close_log, logger, handler)

    @setup_check
    def get_logger(self, logname: str, log_level: int = logging.DEBUG) -> logging.Logger:
        """
        Retrieve an existing logger or create a new one if it does not exist.
        Parameters:
            logname (str): Name of the logger.
            log_level (int): Log level.
        Returns:
            logging.Logger: The requested logger.
        """
        if logname not in self.logger_dict:
            self.create_logger(logname, log_level)
        return self.logger_dict[logname]

    @staticmethod
    def close_log(logger: logging.Logger, file_handler: Optional[logging.Handler]) -> None:
        """
        Close a handler of a logger and remove it from the logger.
        Parameters:
            logger (logging.Logger): The logger whose handler should be closed.
            file_handler (logging.Handler): The handler to close.
        """
        if file_handler is None:
            return
        try:
            file_handler.close()
            logger.removeHandler(file_handler)
        except Exception:
            pass

    @setup_check
    def get_log(self, logname: str, log_level: int = logging.DEBUG, verbose: int = 0, enable_profiling: Optional[str] = None,
                expected_errors: Tuple[Type[BaseException], ...] = ()) -> Callable:
        """
        Get a decorator that injects a logger, traces errors and optionally profiles the wrapped function.
        Parameters:
            logname (str): Name of the logger.
            log_level (int): Log level to use.
            verbose (int): Log call and return of the wrapped function.
            enable_profiling (str, optional): Profiling type ("function", "line", or None).
            expected_errors (tuple): Exception types that are user errors; they are logged at info level without traceback.
        Returns:
            Callable: A decorator for functions taking a `log` keyword.
        """
        logger = self.get_logger(logname, log_level=log_level)

        def trace_error_msg() -> str:
            """Format the last traceback without the frames of the LogManager itself."""
            lines = traceback.format_exc().split('\n')
            filtered_lines = [line for i, line in enumerate(lines) if "log_manager" not in line
                              and (i == 0 or "log_manager" not in lines[i - 1])]
            return '\n'.join(filtered_lines)

        def manage_profiling(func: Callable, args: tuple, kwargs: dict) -> Any:
            """Run func under the requested profiler and log the statistics."""
            if enable_profiling == "line":
                profiler = LineProfiler()
                profiler.add_function(func)
                profiler.enable()
                try:
                    result = func(*args, **kwargs)
                finally:
                    profiler.disable()
                profiling_info = io.StringIO()
                profiler.print_stats(stream=profiling_info)
                logger.pinfo("LineProfiler Stats:\n" + profiling_info.getvalue(), _log_system_msg="<LOG_MANAGER>")
                return result
            if enable_profiling in ["function", "func"]:
                start_time = time.time()
                process = psutil.Process()
                cpu_before = process.cpu_percent(interval=None)
                memory_before = process.memory_info().rss
                result = func(*args, **kwargs)
                cpu_after = process.cpu_percent(interval=None)
                memory_after = process.memory_info().rss
                time_taken = time.time() - start_time
                logger.pinfo(f"Time Taken: ** {func.__name__} ** took {time_taken // 3600:.0f} hr {(time_taken % 3600) // 60:.0f} min {time_taken % 60:.2f} sec", _log_system_msg="<LOG_MANAGER>")
                logger.pinfo(f"Resource usage: CPU {cpu_after - cpu_before}%, Memory {((memory_after - memory_before) / (1024 * 1024)):.2f} MB", _log_system_msg="<LOG_MANAGER>")
                return result
            return func(*args, **kwargs)

        def decorator(func: Callable) -> Callable:
            @wraps(func)
            def wrapper(*args: Any, **kwargs: Any) -> Any:
                if verbose:
                    logger.debug(f'Function ** {func.__name__} ** Called', _log_system_msg="<LOG_MANAGER>")
                kwargs['log'] = logger
                try:
                    _result = manage_profiling(func, args, kwargs)
                except expected_errors as e:
                    logger.info(f"{type(e).__name__}: {e}", _log_system_msg="<LOG_MANAGER>")
                    raise
                except Exception as e:
                    logger.error(f"Uncaught Error: {e}", _log_system_msg="<LOG_MANAGER>")
                    logger.debug(trace_error_msg(), _log_system_msg="<LOG_MANAGER>")
                    raise
                if verbose:
                    logger.debug(f'Function ** {func.__name__} ** Returned.', _log_system_msg="<LOG_MANAGER>")
                return _result
            return wrapper

        return decorator

    setup_check = staticmethod(setup_check)
