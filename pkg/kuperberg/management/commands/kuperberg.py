"""
    Batch verification & evaluation command:

        python manage.py kuperberg <subcommand> [arguments] [flags]

    Algebras are `.hopf` paths or `catalog:NAME`; diagrams are `.khd` paths or
    `builtin:NAME`. Exit codes: 0 on success, 1 when a verification fails,
    2 on usage, parse or format errors.
"""

import argparse
import logging
from pathlib import Path
from typing import Any, Callable, NoReturn, Sequence

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError, CommandParser
from django.db import DatabaseError

from kuperberg.exceptions import (
    BadParamsError,
    DuplicatePointIdError,
    HopfFormatError,
    KhdSyntaxError,
    KuperbergError,
    UnknownAlgebraError,
    UnknownCurveRefError,
    UnknownDiagramError
)
from kuperberg.evaluator.invariants import (
    GaugeVerdict,
    InvariantResult,
    evaluate,
    evaluate_naive,
    format_record,
    gauge_check
)
from kuperberg.evaluator.lemmas import lemma_suite
from kuperberg.heegaard.builtins import builtin
from kuperberg.heegaard.diagrams import DiagramReport, FramedHeegaardDiagram, rotation_exponents, validate
from kuperberg.heegaard.parser import parse_khd
from kuperberg.hopf.algebra import AxiomReport, HopfAlgebra, check_hopf_axioms
from kuperberg.hopf.catalog import catalog, catalog_names
from kuperberg.hopf.integrals import HALFINT_CONVENTIONS, IntegralPair, compute_integrals, default_convention
from kuperberg.hopf.serialization import parse_hopf
from kuperberg.hopf.suites import IdentityReport, trace_identity_suite
from kuperberg.models import InvariantRecord
from kuperberg.twist.cocycles import Cocycle, verify_cocycle
from kuperberg.twist.serialization import CocycleDocument, parse_cocycle
from kuperberg.twist.suites import prop22_suite

CATALOG_PREFIX: str = "catalog:"
BUILTIN_PREFIX: str = "builtin:"
SUBCOMMANDS: tuple[str, ...] = (
    "axioms", "integrals", "validate", "exponents", "invariant", "twist-check", "suites", "catalog-list"
)

EXIT_VERIFICATION_FAILED: int = 1
EXIT_USAGE: int = 2

USAGE_ERRORS: tuple[type[Exception], ...] = (
    HopfFormatError,
    KhdSyntaxError,
    DuplicatePointIdError,
    UnknownCurveRefError,
    UnknownAlgebraError,
    UnknownDiagramError,
    BadParamsError,
    OSError
)


class UsageErrorParser(CommandParser):
    """ Sub-command parser whose errors always carry the usage exit code. """

    def error(self, message: str) -> NoReturn:
        raise CommandError(f"Error: {message}", returncode=EXIT_USAGE)


def positive_int(text: str) -> int:
    try:
        value: int = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be greater than 0")
    return value


def contraction_order(text: str) -> list[tuple[int, int]]:
    """ Parses "3:4,7:12,…" into a list of node id pairs. """

    pairs: list[tuple[int, int]] = []
    step: str
    for step in text.split(","):
        left: str
        separator: str
        right: str
        left, separator, right = step.strip().partition(":")
        if not separator or not left.isdigit() or not right.isdigit():
            raise argparse.ArgumentTypeError(f"contraction steps look like 3:4, got {step!r}")
        pairs.append((int(left), int(right)))
    return pairs


class Command(BaseCommand):
    help = "Verify Hopf algebra data & evaluate Kuperberg invariants of framed Heegaard diagrams."

    def add_arguments(self, parser: CommandParser) -> None:
        common: argparse.ArgumentParser = argparse.ArgumentParser(add_help=False)
        common.add_argument("--machine", action="store_true", help="Print key=value records instead of prose.")
        common.add_argument("--no-verify", action="store_true", help="Skip the Hopf axiom check when reading .hopf files.")
        common.add_argument("--allow-degenerate", action="store_true", help="Allow prime fields dividing the dimension.")

        evaluation: argparse.ArgumentParser = argparse.ArgumentParser(add_help=False)
        evaluation.add_argument("--budget", type=positive_int, help="Maximum intermediate term count.")
        evaluation.add_argument("--convention", choices=HALFINT_CONVENTIONS, help="Half-integer cointegral convention.")

        subparsers: Any = parser.add_subparsers(dest="subcommand", required=True, parser_class=UsageErrorParser)

        subparser: argparse.ArgumentParser = subparsers.add_parser("axioms", parents=[common], help="Check the Hopf algebra axioms.")
        subparser.add_argument("algebra")

        subparser = subparsers.add_parser("integrals", parents=[common], help="Compute the normalized integrals.")
        subparser.add_argument("algebra")

        subparser = subparsers.add_parser("validate", parents=[common], help="Check a diagram's admissibility.")
        subparser.add_argument("diagram")

        subparser = subparsers.add_parser("exponents", parents=[common], help="Print the rotation exponents s(p), t(p).")
        subparser.add_argument("diagram")

        subparser = subparsers.add_parser("invariant", parents=[common, evaluation], help="Evaluate Z(M, f, H).")
        subparser.add_argument("algebra")
        subparser.add_argument("diagram")
        subparser.add_argument("--degree", type=int, default=0, help="Framing degree offset.")
        subparser.add_argument("--naive", action="store_true", help="Use the brute-force oracle.")
        subparser.add_argument("--order", type=contraction_order, help="Contraction order as id:id pairs.")
        subparser.add_argument("--record", action="store_true", help="Store the result in the database.")

        subparser = subparsers.add_parser("twist-check", parents=[common, evaluation], help="Compare Z over H & over H_F.")
        subparser.add_argument("algebra")
        subparser.add_argument("cocycle")
        subparser.add_argument("diagram")

        subparser = subparsers.add_parser("suites", parents=[common], help="Run the exact identity suites.")
        subparser.add_argument("algebra")
        subparser.add_argument("--trials", type=positive_int, help="Random trials per suite.")
        subparser.add_argument("--seed", type=int, help="Seed for the random trials.")
        subparser.add_argument("--cocycle", help="Also run the cocycle identities for this .cocycle file.")

        subparsers.add_parser("catalog-list", parents=[common], help="List the catalog algebras.")

    def handle(self, *args: Any, **options: Any) -> None:
        handlers: dict[str, Callable[[dict[str, Any]], None]] = {
            "axioms": self.handle_axioms,
            "integrals": self.handle_integrals,
            "validate": self.handle_validate,
            "exponents": self.handle_exponents,
            "invariant": self.handle_invariant,
            "twist-check": self.handle_twist_check,
            "suites": self.handle_suites,
            "catalog-list": self.handle_catalog_list
        }

        try:
            handlers[options["subcommand"]](options)
        except USAGE_ERRORS as usage_error:
            logging.warning(f"Rejected input: {usage_error}")
            raise CommandError(str(usage_error), returncode=EXIT_USAGE) from usage_error
        except ValidationError as validation_error:
            raise CommandError(
                "\n".join(validation_error.messages), returncode=EXIT_VERIFICATION_FAILED
            ) from validation_error
        except KuperbergError as domain_error:
            raise CommandError(str(domain_error), returncode=EXIT_VERIFICATION_FAILED) from domain_error

    def emit(self, options: dict[str, Any], human: str | Sequence[str], record: dict[str, Any]) -> None:
        if options["machine"]:
            self.stdout.write(format_record(record))
            return
        lines: Sequence[str] = [human] if isinstance(human, str) else human
        line: str
        for line in lines:
            self.stdout.write(line)

    @staticmethod
    def load_algebra(reference: str, options: dict[str, Any], verify: bool | None = None) -> HopfAlgebra:
        if reference.startswith(CATALOG_PREFIX):
            return catalog(reference.removeprefix(CATALOG_PREFIX), allow_degenerate=options["allow_degenerate"])
        if verify is None:
            verify = not options["no_verify"]
        return parse_hopf(Path(reference).read_text(encoding="utf-8"), verify=verify)

    @staticmethod
    def load_diagram(reference: str) -> FramedHeegaardDiagram:
        if reference.startswith(BUILTIN_PREFIX):
            return builtin(reference.removeprefix(BUILTIN_PREFIX))
        path: Path = Path(reference)
        return parse_khd(path.read_text(encoding="utf-8"), name=path.stem)

    @staticmethod
    def load_cocycle(reference: str, H: HopfAlgebra) -> Cocycle:
        document: CocycleDocument = parse_cocycle(Path(reference).read_text(encoding="utf-8"))
        if document.target.removeprefix(CATALOG_PREFIX).partition("@")[0] != H.name:
            logging.warning(f"Cocycle {reference} names {document.target} but is applied to {H.name}")
        return verify_cocycle(H, document.tensor(H))

    def handle_axioms(self, options: dict[str, Any]) -> None:
        H: HopfAlgebra = self.load_algebra(options["algebra"], options, verify=False)
        report: AxiomReport = check_hopf_axioms(H)
        self.emit(
            options,
            [str(check) for check in report.checks],
            {"algebra": H.name, "dim": H.dim, "passed": report.passed, "failures": ",".join(check.name for check in report.failures) or "-"}
        )
        report.raise_for_violations()

    def handle_integrals(self, options: dict[str, Any]) -> None:
        H: HopfAlgebra = self.load_algebra(options["algebra"], options)
        P: IntegralPair = compute_integrals(H)
        self.emit(
            options,
            [
                f"Λ = {P.Lambda}",
                f"λ = ({', '.join(str(value) for value in P.lambda_)})",
                f"g = {P.g}",
                f"α = ({', '.join(str(value) for value in P.alpha)})",
                f"α(g) = {P.alpha_of_g}",
                f"unimodular: {'yes' if P.is_unimodular() else 'no'}"
            ],
            {
                "algebra": H.name,
                "Lambda": str(P.Lambda),
                "g": str(P.g),
                "alpha_of_g": str(P.alpha_of_g),
                "unimodular": P.is_unimodular()
            }
        )

    def handle_validate(self, options: dict[str, Any]) -> None:
        d: FramedHeegaardDiagram = self.load_diagram(options["diagram"])
        report: DiagramReport = validate(d)
        self.emit(
            options,
            report.summary().splitlines(),
            {"diagram": d.name, "passed": report.passed, "violations": ",".join(sorted(report.rules())) or "-"}
        )
        report.raise_for_violations()

    def handle_exponents(self, options: dict[str, Any]) -> None:
        d: FramedHeegaardDiagram = self.load_diagram(options["diagram"])
        validate(d).raise_for_violations()
        exponents: dict[str, tuple[int, int]] = rotation_exponents(d)
        if options["machine"]:
            point_id: str
            s: int
            t: int
            for point_id, (s, t) in exponents.items():
                self.stdout.write(format_record({"diagram": d.name, "point": point_id, "s": s, "t": t}))
            return
        self.stdout.write(f"{d}")
        for point_id, (s, t) in exponents.items():
            self.stdout.write(f"  {point_id}: S^{s} T^{t}")

    def handle_invariant(self, options: dict[str, Any]) -> None:
        H: HopfAlgebra = self.load_algebra(options["algebra"], options)
        d: FramedHeegaardDiagram = self.load_diagram(options["diagram"])
        P: IntegralPair = compute_integrals(H)
        convention: str = options["convention"] or default_convention()

        result: InvariantResult
        if options["naive"]:
            result = evaluate_naive(H, P, d, options["degree"], convention)
        else:
            result = evaluate(H, P, d, options["degree"], convention, options["budget"], options["order"])

        if options["machine"]:
            self.stdout.write(result.as_machine_record())
        else:
            self.stdout.write(str(result))
            self.stdout.write(f"  max intermediate {result.max_intermediate} terms, {result.term_count} products ({result.method})")

        if options["record"]:
            try:
                InvariantRecord.objects.record(result, convention)
            except DatabaseError as database_error:
                raise CommandError(
                    f"Could not store the result ({database_error}); run `manage.py migrate` first.",
                    returncode=EXIT_VERIFICATION_FAILED
                ) from database_error

    def handle_twist_check(self, options: dict[str, Any]) -> None:
        H: HopfAlgebra = self.load_algebra(options["algebra"], options)
        C: Cocycle = self.load_cocycle(options["cocycle"], H)
        d: FramedHeegaardDiagram = self.load_diagram(options["diagram"])
        verdict: GaugeVerdict = gauge_check(H, compute_integrals(H), C, d, options["convention"], options["budget"])
        self.emit(
            options,
            str(verdict),
            {"algebra": H.name, "diagram": d.name, "equal": verdict.equal, "z": verdict.z, "z_twisted": verdict.z_twisted}
        )
        if not verdict.equal:
            raise CommandError("Invariant changed under twisting.", returncode=EXIT_VERIFICATION_FAILED)

    def handle_suites(self, options: dict[str, Any]) -> None:
        H: HopfAlgebra = self.load_algebra(options["algebra"], options)
        P: IntegralPair = compute_integrals(H)
        reports: list[IdentityReport] = [
            trace_identity_suite(H, P, options["trials"], options["seed"]),
            lemma_suite(H, P, options["trials"], options["seed"])
        ]
        if options["cocycle"]:
            reports.append(prop22_suite(H, P, self.load_cocycle(options["cocycle"], H), trials=options["trials"], seed=options["seed"]))

        report: IdentityReport
        for report in reports:
            if options["machine"]:
                self.stdout.write(format_record({"suite": report.name, "trials": report.trials, "passed": report.passed, "failures": len(report.failures)}))
            else:
                self.stdout.write(f"{report.name} ({report.trials} trials)")
                self.stdout.write("\n".join(f"  {line}" for line in report.summary().splitlines()))
                check: Any
                for check in report.failures:
                    self.stdout.write(f"    {check}")

        if not all(report.passed for report in reports):
            raise CommandError("Identity suites report violations.", returncode=EXIT_VERIFICATION_FAILED)

    def handle_catalog_list(self, options: dict[str, Any]) -> None:
        name: str
        for name in catalog_names():
            self.stdout.write(format_record({"algebra": name}) if options["machine"] else name)
