"""Helpers shared by the commands: output format and exit codes.

Exit codes: 0 on success, 1 when a mathematical check fails, 2 for
malformed input.
"""

import functools

import click
from loguru import logger

from parcoh.config import AppConfig
from parcoh.errors import (
    DomainError,
    ParcohError,
    StructuralError,
    TruncationError,
)
from parcoh.reports import FORMATS, TEXT, Report

EXIT_FAILURE = 1
EXIT_STRUCTURAL = 2


class CommandContext:
    """Context object for CLI commands with shared dependencies."""

    def __init__(self, config: AppConfig):
        self.config = config


pass_context = click.make_pass_decorator(CommandContext)


class CommandFailed(click.ClickException):
    """A one-line error with the exit code of its category."""

    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(FORMATS),
    default=TEXT,
    show_default=True,
    help="Report format",
)


def exit_code_for(error: ParcohError) -> int:
    if isinstance(error, (StructuralError, DomainError, TruncationError)):
        return EXIT_STRUCTURAL
    return EXIT_FAILURE


def handles_errors(command):
    """Turn library errors into one-line messages with the right exit code."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ParcohError as error:
            logger.debug(f"{type(error).__name__}: {error}")
            raise CommandFailed(str(error), exit_code_for(error)) from error

    return wrapper


def emit(report: Report, fmt: str) -> None:
    """Print ``report`` and exit 1 if it records a failure."""
    click.echo(report.render(fmt))
    if not report.ok:
        raise click.exceptions.Exit(EXIT_FAILURE)
