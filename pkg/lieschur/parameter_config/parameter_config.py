import os
import logging
from typing import Optional, Union, Callable

from lieschur.exceptions import ConfigError


class LogConfig:
    __slots__ = ['_root_log_path', '_console_level', '_log_file_num_limit', '_log_file_day_limit']

    def __init__(self, data: Union[dict, Callable]) -> None:
        self._root_log_path = None
        self._console_level = None
        self._log_file_num_limit = None
        self._log_file_day_limit = None

        if isinstance(data, dict):
            root_log_path = data.get('root_log_path')
            console_level = data.get('console_level', logging.WARNING)
            log_file_num_limit = data.get('log_file_num_limit', 20)
            log_file_day_limit = data.get('log_file_day_limit', 7)
        else:
            # Assuming 'data' is an object with the same attribute names
            assert all(hasattr(data, attr) for attr in ["root_log_path", "console_level"]), "Invalid data type for log config"
            root_log_path = getattr(data, "root_log_path", None)
            console_level = getattr(data, "console_level", logging.WARNING)
            log_file_num_limit = getattr(data, "log_file_num_limit", 20)
            log_file_day_limit = getattr(data, "log_file_day_limit", 7)

        self.setup(root_log_path, console_level, log_file_num_limit, log_file_day_limit)

    def setup(self, root_log_path: Optional[str] = None, console_level: Union[int, str] = logging.WARNING,
              log_file_num_limit: Optional[int] = 20, log_file_day_limit: Optional[int] = 7) -> None:
        """
        Setup the log configuration.
        Parameters:
            root_log_path (str, optional): Folder for log files. None keeps logging on the console only.
            console_level (int or str): Level of the stderr handler used when no folder is given.
            log_file_num_limit (int, optional): Number of log files kept in the folder.
            log_file_day_limit (int, optional): Age in days after which log files are removed.
        """
        if isinstance(console_level, str):
            level = logging.getLevelName(console_level.upper())
            if not isinstance(level, int):
                raise ConfigError(f"Unknown log level: {console_level}")
            console_level = level
        for name, value in (("log_file_num_limit", log_file_num_limit), ("log_file_day_limit", log_file_day_limit)):
            if value is not None and (not isinstance(value, int) or value < 0):
                raise ConfigError(f"{name} must be a nonnegative integer, got {value!r}")
        self._root_log_path = os.path.abspath(root_log_path) if root_log_path else None
        self._console_level = console_level
        self._log_file_num_limit = log_file_num_limit
        self._log_file_day_limit = log_file_day_limit

    @property
    def root_log_path(self) -> Optional[str]:
        return self._root_log_path

    @property
    def console_level(self) -> int:
        return self._console_level

    @property
    def log_file_num_limit(self) -> Optional[int]:
        return self._log_file_num_limit

    @property
    def log_file_day_limit(self) -> Optional[int]:
        return self._log_file_day_limit

    @root_log_path.setter
    def root_log_path(self, value: Optional[str]) -> None:
        self._root_log_path = value

    @console_level.setter
    def console_level(self, value: int) -> None:
        self._console_level = value

    def __repr__(self) -> str:
        return (f"LogConfig(root_log_path={self._root_log_path}, console_level={logging.getLevelName(self._console_level)}, "
                f"log_file_num_limit={self._log_file_num_limit}, log_file_day_limit={self._log_file_day_limit})")


class ComputeConfig:
    __slots__ = ['_column_guardrail', '_homology_dim_limit', '_random_seed']

    def __init__(self, data: Union[dict, Callable]) -> None:
        self._column_guardrail = None
        self._homology_dim_limit = None
        self._random_seed = None

        if isinstance(data, dict):
            self.setup(
                column_guardrail=data.get('column_guardrail', 10 ** 5),
                homology_dim_limit=data.get('homology_dim_limit', 35),
                random_seed=data.get('random_seed', 0)
            )
        else:
            assert hasattr(data, "column_guardrail"), "Invalid data type for compute config"
            self.setup(
                column_guardrail=data.column_guardrail,
                homology_dim_limit=getattr(data, "homology_dim_limit", 35),
                random_seed=getattr(data, "random_seed", 0)
            )

    def setup(self, column_guardrail: int = 10 ** 5, homology_dim_limit: int = 35, random_seed: int = 0) -> None:
        """
        Setup the computation limits.
        Parameters:
            column_guardrail (int): Number of exterior-cube columns above which a multiplier run needs --force.
            homology_dim_limit (int): Largest algebra dimension for which verify runs homological cross-checks.
            random_seed (int): Seed for randomly generated test algebras.
        """
        for name, value in (("column_guardrail", column_guardrail), ("homology_dim_limit", homology_dim_limit)):
            if not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        self._column_guardrail = column_guardrail
        self._homology_dim_limit = homology_dim_limit
        self._random_seed = int(random_seed)

    @property
    def column_guardrail(self) -> int:
        return self._column_guardrail

    @property
    def homology_dim_limit(self) -> int:
        return self._homology_dim_limit

    @property
    def random_seed(self) -> int:
        return self._random_seed

    @column_guardrail.setter
    def column_guardrail(self, value: int) -> None:
        self._column_guardrail = value

    @homology_dim_limit.setter
    def homology_dim_limit(self, value: int) -> None:
        self._homology_dim_limit = value

    def __repr__(self) -> str:
        return (f"ComputeConfig(column_guardrail={self._column_guardrail}, "
                f"homology_dim_limit={self._homology_dim_limit}, random_seed={self._random_seed})")


class ParameterConfig:
    __slots__ = ['_log_config', '_compute_config']

    def __init__(self) -> None:
        """
        Create a new ParameterConfig object with placeholder values.
        """
        self._log_config = None
        self._compute_config = None

    @property
    def log_config(self) -> Optional[LogConfig]:
        return self._log_config

    @property
    def compute_config(self) -> Optional[ComputeConfig]:
        return self._compute_config

    @property
    def is_setup(self) -> bool:
        return self._log_config is not None and self._compute_config is not None

    @log_config.setter
    def log_config(self, value: Optional[Union[Callable, dict]]) -> None:
        self._log_config = LogConfig(value)

    @compute_config.setter
    def compute_config(self, value: Optional[Union[Callable, dict]]) -> None:
        self._compute_config = ComputeConfig(value)

    def setup(self, log_config: Optional[Union[Callable, dict]] = None, compute_config: Optional[Union[Callable, dict]] = None) -> None:
        """
        Setup logging and computation settings.
        Parameters:
            log_config (dict or object, optional): See LogConfig.
            compute_config (dict or object, optional): See ComputeConfig.
        """
        self.log_config = log_config if log_config is not None else {}
        self.compute_config = compute_config if compute_config is not None else {}

    def __repr__(self) -> str:
        return f"ParameterConfig(log_config={self._log_config}, compute_config={self._compute_config})"
