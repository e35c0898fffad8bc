"""
Jordanian CLI Main
==================

Main command-line interface entry point.

Exit codes: 0 all identities pass, 1 an identity failed, 2 usage or input
error, 130 interrupted.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Dict, Optional

import click
from pydantic import ValidationError

from ..core.base import SuiteContext, build_context
from ..core.builder import SUITES, SuiteBuilder
from ..core.config import EMIT_TARGETS, CommandConfig, VerificationSettings, load_settings
from ..core.exceptions import JordanianException
from ..core.types import OutputFormat
from ..components.coloured.rmatrix import braid_operator, coloured_R
from ..components.representation.rep import fundamental_rep, universal_R_rep
from ..components.rtt.determinant import FORMS, quantum_determinant
from ..components.rtt.relations import closed_form_relations
from ..utils.logging import setup_logging
from ..utils.serialization import load_report, matrix_to_json, render_matrix, render_report
from ..__version__ import __version__


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_INTERRUPTED = 130

FORMAT_CHOICE = click.Choice(['json', 'latex', 'plain'])


def parse_bindings(text: Optional[str]) -> Dict[str, str]:
    """'h=1,s=2,lambda=3' -> {'h': '1', 's': '2', 'lambda': '3'}"""
    bindings: Dict[str, str] = {}
    if not text:
        return bindings
    for part in text.split(','):
        name, sep, value = part.partition('=')
        name, value = name.strip(), value.strip()
        if not sep or not name or not value:
            raise click.BadParameter(f"malformed binding '{part.strip()}' (expected name=value)", param_hint='--at')
        if name in bindings:
            raise click.BadParameter(f"'{name}' bound twice", param_hint='--at')
        bindings[name] = value
    return bindings


def colour_options(func):
    """--lambda/--mu/--nu/--eta and --at"""
    options = [
        click.option('--lambda', 'lam', default=None, help='First colour (default: symbol lambda)'),
        click.option('--mu', default=None, help='Second colour (default: symbol mu)'),
        click.option('--nu', default=None, help='Third colour (default: symbol nu)'),
        click.option('--eta', default=None, help='Colour of single-colour checks (default: symbol eta)'),
        click.option('--at', 'at', default=None, help='Bindings such as "h=1,s=2,lambda=3"'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _colours(lam, mu, nu, eta) -> Dict[str, str]:
    return {role: value for role, value in (('lambda', lam), ('mu', mu), ('nu', nu), ('eta', eta))
            if value is not None}


def _command(command: str, target: str, colours, at, output_format, output) -> CommandConfig:
    try:
        return CommandConfig(
            command=command, target=target, colours=colours, at=at,
            format=output_format, output=Path(output) if output else None
        )
    except ValidationError as e:
        raise click.UsageError(e.errors()[0]['msg'])


def _write(text: str, output: Optional[Path]) -> None:
    if output is None:
        click.echo(text)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text + '\n', encoding='utf-8')
    click.echo(f"Written to {output}", err=True)


@click.group()
@click.version_option(version=__version__, prog_name='Jordanian')
@click.option('--log-dir', default='logs', help='Log directory')
@click.option('--verbose', '-v', is_flag=True, help='Verbose output on stderr')
@click.pass_context
def cli(ctx, log_dir, verbose):
    """
    Jordanian - coloured Jordanian quantum group GL_(h,s)(2)

    Build the coloured R-matrix and the RTT algebra and verify their
    identities exactly.
    """
    ctx.ensure_object(dict)
    ctx.obj['logger_system'] = setup_logging(
        log_dir=log_dir,
        console_output=True,
        console_level=logging.DEBUG if verbose else logging.WARNING
    )
    ctx.obj['logger'] = ctx.obj['logger_system'].get_logger('cli')
    ctx.obj['verbose'] = verbose


# ----------------------------------------------------------------------------
# emit
# ----------------------------------------------------------------------------

def emit_text(target: str, context: SuiteContext, output_format: OutputFormat) -> str:
    """
    Render one construction

    Args:
        target: One of EMIT_TARGETS
        context: Colours and parameters
        output_format: json, latex or plain

    Returns:
        str: Deterministic text
    """
    params = context.params
    if target == 'r-matrix':
        return render_matrix(coloured_R(context.lam, context.mu, params).matrix, output_format)
    if target == 'braid':
        return render_matrix(braid_operator(context.lam, context.mu, params).matrix, output_format)
    if target == 'universal-r':
        bound = context.settings.nilpotency_bound
        return render_matrix(universal_R_rep(context.lam, context.mu, params, bound), output_format)
    if target == 'representation':
        images = fundamental_rep(context.eta, params)
        if output_format == 'json':
            return json.dumps({g.value: matrix_to_json(m) for g, m in images.items()}, indent=2, ensure_ascii=False)
        blocks = []
        for g, m in images.items():
            if output_format == 'latex':
                blocks.append(f"\\pi({g.value}) = {render_matrix(m, 'latex')}")
            else:
                blocks.append(f"{g.value}:\n{render_matrix(m, 'plain')}")
        return '\n\n'.join(blocks)
    if target == 'relations':
        relations = closed_form_relations(context.lam, context.mu, params)
        if output_format == 'json':
            return json.dumps([{'name': n, 'element': e.format()} for n, e in relations], indent=2, ensure_ascii=False)
        return '\n'.join(relations.format(output_format))
    if target == 'determinant':
        forms = {form: quantum_determinant(context.lam, params, form) for form in FORMS}
        if output_format == 'json':
            return json.dumps({form: d.format() for form, d in forms.items()}, indent=2, ensure_ascii=False)
        style = 'latex' if output_format == 'latex' else 'plain'
        return '\n'.join(f"D ({form}) = {d.format(style)}" for form, d in forms.items())
    raise click.UsageError(f"unknown emit target '{target}'")


@cli.command()
@click.argument('target')
@colour_options
@click.option('--format', 'output_format', type=FORMAT_CHOICE, default='plain', help='Output format')
@click.option('--output', '-o', type=click.Path(), default=None, help='Write to a file instead of stdout')
@click.pass_context
def emit(ctx, target, lam, mu, nu, eta, at, output_format, output):
    """
    Emit a matrix, representation, relation list or determinant.

    TARGET is one of r-matrix, braid, universal-r, representation,
    relations, determinant.

    Example:
        jordanian emit r-matrix --lambda 0 --mu 0
    """
    logger = ctx.obj['logger']
    command = _command('emit', target, _colours(lam, mu, nu, eta), parse_bindings(at), output_format, output)

    try:
        context = build_context(command.colours, command.at)
        _write(emit_text(command.target, context, command.format), command.output)
    except KeyboardInterrupt:
        click.echo("\n\nInterrupted by user", err=True)
        sys.exit(EXIT_INTERRUPTED)
    except JordanianException as e:
        logger.error(f"Emit failed: {e}")
        click.echo(click.style(f"✗ Error: {e}", fg='red'), err=True)
        sys.exit(EXIT_USAGE)


# ----------------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------------

@cli.command()
@click.argument('suite')
@colour_options
@click.option('--format', 'output_format', type=FORMAT_CHOICE, default='plain', help='Report format')
@click.option('--output', '-o', type=click.Path(), default=None, help='Write the report to a file')
@click.option('--max-sector-dim', type=int, default=None, help='Largest word sector eliminated')
@click.option('--workers', type=int, default=None, help='Suites run concurrently')
@click.option('--config', 'config_path', type=click.Path(exists=True), default=None,
              help='YAML settings file')
@click.pass_context
def verify(ctx, suite, lam, mu, nu, eta, at, output_format, output, max_sector_dim, workers, config_path):
    """
    Verify the identities of a suite (or all suites).

    SUITE is one of ybe, braid, unitarity, char-eq, specialize, hopf,
    quasitriangular, classical, rtt, determinant, all.

    Example:
        jordanian verify all --at "h=1,s=2,lambda=3,mu=5,nu=7"
    """
    logger = ctx.obj['logger']
    command = _command('verify', suite, _colours(lam, mu, nu, eta), parse_bindings(at), output_format, output)

    try:
        settings = load_settings(config_path, {'max_sector_dim': max_sector_dim, 'workers': workers})
        builder = SuiteBuilder().with_settings(settings).with_at(command.at)
        builder.with_colours(
            command.colours.get('lambda'), command.colours.get('mu'),
            command.colours.get('nu'), command.colours.get('eta')
        )
        if command.target == 'all':
            builder.with_all()
        else:
            builder.with_suite(command.target)
        pipeline = builder.build_and_validate()

        logger.info(f"Verifying {command.target}")
        result = pipeline.run()
    except KeyboardInterrupt:
        click.echo("\n\nInterrupted by user", err=True)
        sys.exit(EXIT_INTERRUPTED)
    except JordanianException as e:
        logger.error(f"Verification setup failed: {e}")
        click.echo(click.style(f"✗ Error: {e}", fg='red'), err=True)
        sys.exit(EXIT_USAGE)

    if not result['reports'] and result.get('errors'):
        for error in result['errors']:
            click.echo(click.style(f"✗ Error: {error}", fg='red'), err=True)
        sys.exit(EXIT_USAGE)

    entries = [entry for name in sorted(result['reports']) for entry in result['reports'][name]]
    _write(render_report(entries, command.format), command.output)

    if not result['success']:
        for error in result.get('errors', []):
            click.echo(click.style(f"✗ {error}", fg='red'), err=True)
        sys.exit(EXIT_FAILURE)
    sys.exit(EXIT_OK)


# ----------------------------------------------------------------------------
# report
# ----------------------------------------------------------------------------

@cli.command()
@click.argument('path', type=click.Path(exists=True))
@click.option('--format', 'output_format', type=FORMAT_CHOICE, default='plain', help='Output format')
@click.option('--output', '-o', type=click.Path(), default=None, help='Write to a file instead of stdout')
@click.pass_context
def report(ctx, path, output_format, output):
    """
    Render an existing JSON report; exit 1 if any identity failed.

    Example:
        jordanian report results.json --format latex
    """
    logger = ctx.obj['logger']
    command = _command('report', str(path), {}, {}, output_format, output)
    try:
        entries = load_report(path)
    except JordanianException as e:
        logger.error(f"Cannot load report: {e}")
        click.echo(click.style(f"✗ Error: {e}", fg='red'), err=True)
        sys.exit(EXIT_USAGE)

    _write(render_report(entries, command.format), command.output)
    sys.exit(EXIT_OK if all(e['status'] == 'pass' for e in entries) else EXIT_FAILURE)


# ----------------------------------------------------------------------------
# info / test
# ----------------------------------------------------------------------------

@cli.command()
@click.pass_context
def info(ctx):
    """
    Display suites, emit targets and default settings.
    """
    click.echo(f"\nJordanian v{__version__}")
    click.echo(f"{'='*60}")

    click.echo("\nSuites:")
    for name, cls in SUITES.items():
        summary = (cls.__doc__ or '').strip().splitlines()
        click.echo(f"  {name:<16}{summary[0] if summary else ''}")

    click.echo("\nEmit targets:")
    click.echo(f"  {', '.join(EMIT_TARGETS)}")

    click.echo("\nDefault settings:")
    for key, value in VerificationSettings().model_dump().items():
        click.echo(f"  {key:<26}{value}")

    click.echo()


@cli.command()
def test():
    """
    Run library tests.
    """
    import pytest

    tests_dir = Path(__file__).parent.parent / 'tests'

    click.echo("Running Jordanian tests...\n")

    result = pytest.main([
        str(tests_dir),
        '-v',
        '--tb=short'
    ])

    sys.exit(result)


if __name__ == '__main__':
    cli()
