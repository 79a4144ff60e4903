# File: core/commands.py
"""Shared plumbing for the q-calculus management commands."""

from contextlib import contextmanager
import logging

from django.core.management.base import CommandError

from .exceptions import QCalculusError

logger = logging.getLogger(__name__)

USAGE_EXIT = 2


def friendly_validation_message(serializer_errors) -> str:
    """Turn serializer errors into a one-line '--field: message' summary"""
    if not isinstance(serializer_errors, dict):
        return ' '.join(str(error) for error in serializer_errors) or "Invalid arguments"
    parts = []
    for field, errors in serializer_errors.items():
        if isinstance(errors, dict):
            errors = [f"{key}: {value}" for key, value in errors.items()]
        text = ' '.join(str(error) for error in errors)
        parts.append(text if field == 'non_field_errors' else f"--{field}: {text}")
    return '; '.join(parts) or "Invalid arguments"


def validated(serializer_class, data, **kwargs):
    """Validate `data`, raising a usage CommandError with a friendly message"""
    serializer = serializer_class(data=data, **kwargs)
    if not serializer.is_valid():
        message = friendly_validation_message(serializer.errors)
        logger.warning(f"Rejected arguments: {message}")
        raise CommandError(message, returncode=USAGE_EXIT)
    return serializer


@contextmanager
def command_errors():
    """Map q-calculus errors onto CommandError with the matching exit code"""
    try:
        yield
    except QCalculusError as exc:
        raise CommandError(f"{type(exc).__name__}: {exc}", returncode=exc.exit_code) from exc


def add_actions(parser, dest='action'):
    """Subparser group whose parsers exit 2 on usage errors from the shell"""
    subparsers = parser.add_subparsers(dest=dest, required=True)

    def add(name, **kwargs):
        return subparsers.add_parser(
            name, called_from_command_line=parser.called_from_command_line, **kwargs
        )

    return add
