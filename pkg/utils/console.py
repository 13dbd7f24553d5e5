"""
Console progress output for solvers and the CLI.

Lines go to stderr so that stdout only ever carries the report.
"""

import sys

from election.settings import get_settings

STATUS_EMOJIS = {
    "starting": "🚀",
    "progress": "⚙️",
    "completed": "✅",
    "error": "❌",
    "refused": "⛔",
}


def log_verbose(message: str, emoji: str = "🔧", force: bool = False) -> None:
    """Log verbose messages if verbosity is enabled."""
    if force or get_settings().verbose:
        print(f"{emoji} {message}", file=sys.stderr)


def log_action(action: str, status: str = "starting") -> None:
    """Log high-level actions with progress indicators (only when verbose)."""
    emoji = STATUS_EMOJIS.get(status, "🔧")
    log_verbose(action, emoji)


def log_warning(message: str) -> None:
    """Warnings are always shown."""
    log_verbose(message, "⚠️", force=True)
