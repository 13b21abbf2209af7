"""
    Programmatic entry point to the `kuperberg` management command that
    returns the exit code instead of raising.
"""

import sys
from typing import Sequence, TextIO

from django.core.management import call_command
from django.core.management.base import CommandError

from kuperberg.management.commands.kuperberg import EXIT_USAGE, SUBCOMMANDS


def run(argv: Sequence[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    if not argv or argv[0] not in SUBCOMMANDS:
        stderr.write(f"usage: kuperberg {{{','.join(SUBCOMMANDS)}}} ...\n")
        return EXIT_USAGE

    try:
        call_command("kuperberg", *argv, stdout=stdout, stderr=stderr)
    except CommandError as error:
        stderr.write(f"{error}\n")
        return error.returncode
    return 0
