"""
arfkit command line utility.

Every command takes one or more document files and prints one report per
file, in input order:

    arfkit arf docs/examples/trefoil.json
    arfkit --verbose brown --json docs/examples/borromean-surface.json
    arfkit relation-check knot.json knot-surface.json

The exit status is 2 if any file could not be read, parsed or computed,
otherwise 1 if any verdict failed, otherwise 0.  Diagnostics and log
messages go to stderr; stdout only carries reports.

Settings can be changed with --setting KEY:VALUE, an arfkit.ini file or
ARFKIT_* environment variables, e.g. ARFKIT_ENUM_CAP=28.
"""
import sys

import click

from arfkit import documents, reports
from arfkit.base import constants, settings
from arfkit.base.exceptions import (ArfkitException, DocumentError,
                                    DocumentSyntaxError, UnknownKindError)
from arfkit.base.output import out


CONTEXT_SETTINGS = dict(
    # Options can be parsed from ARFKIT_* environment variables.
    auto_envvar_prefix='ARFKIT',

    # Respond to both -h and --help for all commands.
    help_option_names=['-h', '--help'],
)


def describe(error):
    """
    One-line diagnostic for an input error.
    """
    if isinstance(error, DocumentSyntaxError):
        prefix = "syntax error"
    elif isinstance(error, UnknownKindError):
        prefix = "unknown kind"
    elif isinstance(error, DocumentError):
        prefix = "invalid document"
    else:
        prefix = type(error).__name__

    message = "{}: {}".format(prefix, error)
    line = getattr(error, 'line', None)
    if line is not None:
        message += " (line {}, column {})".format(line, error.column)
    return message


def exit_status(input_errors, failures):
    if input_errors:
        return constants.EXIT_INPUT_ERROR
    elif failures:
        return constants.EXIT_VERDICT_FAILS
    else:
        return constants.EXIT_OK


def run_batch(ctx, jobs, as_json, handler, **kwargs):
    """
    Run handler on every job and print the reports.

    A job is (source label, list of paths); the handler receives the
    report followed by one parsed document per path.
    """
    entries = []
    input_errors = 0
    failures = 0
    out.header("{} on {} input(s)".format(ctx.info_name, len(jobs)))

    for source, paths in jobs:
        try:
            docs = [documents.read_document(path) for path in paths]
            report = reports.Report(source=source,
                                    command=ctx.info_name,
                                    name=docs[0].name)
            handler(report, *docs, **kwargs)
        except ArfkitException as error:
            input_errors += 1
            out.err("{} rejected: {}".format(source, error))
            click.echo("arfkit: {}: {}".format(source, describe(error)), err=True)
            entries.append(reports.error_entry(source, error))
            continue

        if report.failed:
            failures += 1
        out.info("{} done{}".format(source, " (fails)" if report.failed else ""))

        if as_json:
            entries.append(reports.to_dict(report))
        else:
            click.echo(reports.render_text(report))

    if as_json:
        click.echo(reports.render_json(entries))

    ctx.exit(exit_status(input_errors, failures))


def single_file_jobs(paths):
    return [(path, [path]) for path in paths]


json_option = click.option('--json', 'as_json', is_flag=True,
                           help='Print machine-readable JSON instead of text.')
files_argument = click.argument('files', nargs=-1, required=True,
                                type=click.Path(dir_okay=False))


@click.group(context_settings=CONTEXT_SETTINGS)
@click.option('--verbose', '-v', is_flag=True, default=False,
              help='Print log messages to stderr.')
@click.option('--setting', '-s', 'setting_list', multiple=True, metavar='KEY:VALUE',
              help='Override a setting, e.g. ENUM_CAP:20. May be repeated.')
@click.pass_context
def root(ctx, verbose, setting_list):
    """
    Arf and Brown invariants, signatures and Rochlin congruences.
    """
    try:
        settings.loadSettings(list(setting_list))
    except ValueError as error:
        raise click.BadParameter(str(error), param_hint='--setting')

    out.startLogging(printToConsole=True if verbose else None)


@root.command('help')
@click.pass_context
def help(ctx):
    """
    Show this message and exit
    """
    click.echo(ctx.parent.get_help())


@root.command('arf')
@json_option
@files_argument
@click.pass_context
def arf(ctx, as_json, files):
    """
    Arf invariant of quadratic spaces and Seifert matrices.
    """
    run_batch(ctx, single_file_jobs(files), as_json, reports.report_arf)


@root.command('brown')
@json_option
@files_argument
@click.pass_context
def brown(ctx, as_json, files):
    """
    Brown invariant of enhanced spaces and spanning surfaces.
    """
    run_batch(ctx, single_file_jobs(files), as_json, reports.report_brown)


@root.command('classify')
@json_option
@files_argument
@click.pass_context
def classify(ctx, as_json, files):
    """
    Isomorphism class (dim, radical dim, Arf) of quadratic spaces.
    """
    run_batch(ctx, single_file_jobs(files), as_json, reports.report_classify)


@root.command('signature')
@json_option
@files_argument
@click.pass_context
def signature(ctx, as_json, files):
    """
    Signature, determinant and parity of integer forms.
    """
    run_batch(ctx, single_file_jobs(files), as_json, reports.report_signature)


@root.command('charvec')
@json_option
@files_argument
@click.pass_context
def charvec(ctx, as_json, files):
    """
    Characteristic vector of unimodular forms and the mod 8 check.
    """
    run_batch(ctx, single_file_jobs(files), as_json, reports.report_charvec)


@root.command('mu')
@json_option
@files_argument
@click.pass_context
def mu(ctx, as_json, files):
    """
    Rochlin invariant from even surgery presentations.
    """
    run_batch(ctx, single_file_jobs(files), as_json, reports.report_mu)


@root.command('surgery-mu')
@click.option('--alpha', type=int, default=1, show_default=True,
              help='Surgery coefficient.')
@json_option
@files_argument
@click.pass_context
def surgery_mu(ctx, alpha, as_json, files):
    """
    Rochlin invariant of integral surgery on knots.
    """
    run_batch(ctx, single_file_jobs(files), as_json, reports.report_surgery_mu, alpha=alpha)


@root.command('verify-closed')
@json_option
@files_argument
@click.pass_context
def verify_closed(ctx, as_json, files):
    """
    Check the closed congruences on closed_scenario documents.
    """
    run_batch(ctx, single_file_jobs(files), as_json, reports.report_verify_closed)


@root.command('verify-relative')
@json_option
@files_argument
@click.pass_context
def verify_relative(ctx, as_json, files):
    """
    Check the relative congruence on scenario documents.
    """
    run_batch(ctx, single_file_jobs(files), as_json, reports.report_verify_relative)


@root.command('relation-check')
@json_option
@files_argument
@click.pass_context
def relation_check(ctx, as_json, files):
    """
    Check beta(L) = 4 Arf(L) + lk(L) on SEIFERT SURFACE file pairs.
    """
    if len(files) % 2 != 0:
        raise click.UsageError("relation-check takes pairs of files: seifert then surface")

    jobs = [("{} + {}".format(files[i], files[i + 1]), [files[i], files[i + 1]])
            for i in range(0, len(files), 2)]
    run_batch(ctx, jobs, as_json, reports.report_relation_check)


@root.command('planar-check')
@json_option
@files_argument
@click.pass_context
def planar_check(ctx, as_json, files):
    """
    Test whether links could bound a connected planar surface in B^4.
    """
    run_batch(ctx, single_file_jobs(files), as_json, reports.report_planar_check)


def main():
    """
    Entry point for the arfkit Python package.
    """
    try:
        root()
    except Exception as error:
        out.exception(error)
        click.echo("arfkit: internal error: {}".format(error), err=True)
        sys.exit(constants.EXIT_INPUT_ERROR)


if __name__ == "__main__":
    main()
