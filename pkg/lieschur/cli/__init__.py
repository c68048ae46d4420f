from .cli import main, build_parser, FORMAT_VERSION
from .verification import CheckResult, run_verification
