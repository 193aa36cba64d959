"""
Command-line interface for parcoh.
"""

import click

from parcoh.commands.common import CommandContext
from parcoh.config import load_config
from parcoh.config.logging import setup_logging


@click.group()
@click.option("-v", "--verbose", count=True, help="Log more (repeatable)")
@click.pass_context
def cli(ctx, verbose: int):
    """Finite partial groups: validation, cohomology and extensions."""
    config = load_config()
    if verbose:
        config.logging.level = "DEBUG" if verbose > 1 else "INFO"
    setup_logging(config.logging)
    ctx.obj = CommandContext(config)


from parcoh.commands.aut import aut  # noqa: E402
from parcoh.commands.build import build  # noqa: E402
from parcoh.commands.classify import classify  # noqa: E402
from parcoh.commands.cohomology import cohomology  # noqa: E402
from parcoh.commands.count_free import count_free  # noqa: E402
from parcoh.commands.extend import extend  # noqa: E402
from parcoh.commands.homotopy import homotopy  # noqa: E402
from parcoh.commands.normalizer import normalizer  # noqa: E402
from parcoh.commands.validate import validate  # noqa: E402

# Register commands
cli.add_command(validate)
cli.add_command(build)
cli.add_command(cohomology)
cli.add_command(normalizer)
cli.add_command(aut)
cli.add_command(homotopy)
cli.add_command(extend)
cli.add_command(classify)
cli.add_command(count_free)


if __name__ == "__main__":
    cli()
