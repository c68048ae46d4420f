from .parameter_config import ParameterConfig, LogConfig, ComputeConfig
