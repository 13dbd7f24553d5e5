# Utils package: console progress output and solver routing
from .console import log_verbose, log_action, log_warning, STATUS_EMOJIS

__all__ = [
    "log_verbose",
    "log_action",
    "log_warning",
    "STATUS_EMOJIS",
]
