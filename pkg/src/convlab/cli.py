"""Command-line front end: diagram builds, single-sequence limit queries, and
the full verification suite."""

from __future__ import annotations

import os
import sys

import click

from .algebra import MAX_ATOMS, Carrier, EPSeq
from .convergence import lambda_li, lambda_ls, lambda_s
from .report import RelationViolation, build_figure1, emit
from .seqclass import inf_class
from .verify import VerifyContext, format_results, run_all


class SeqParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_seq_literal(text: str, carrier: Carrier) -> EPSeq:
    """Parse ``[pre1,pre2;per1,per2]`` with elements as ``{i,j}`` atom lists."""
    pos = 0

    def expect(ch: str) -> None:
        nonlocal pos
        if pos >= len(text) or text[pos] != ch:
            raise SeqParseError(f"expected {ch!r}", pos)
        pos += 1

    def parse_element():
        nonlocal pos
        expect("{")
        atoms = []
        while pos < len(text) and text[pos] != "}":
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if pos == start:
                raise SeqParseError("expected atom index", pos)
            atom = int(text[start:pos])
            if atom >= carrier.n:
                raise SeqParseError(f"atom {atom} out of range for P({carrier.n})", start)
            atoms.append(atom)
            if pos < len(text) and text[pos] == ",":
                pos += 1
        expect("}")
        return carrier.element(atoms)

    def parse_list(terminators: str):
        nonlocal pos
        items = []
        while pos < len(text) and text[pos] not in terminators:
            items.append(parse_element())
            if pos < len(text) and text[pos] == ",":
                pos += 1
        return tuple(items)

    expect("[")
    pre = parse_list(";]")
    expect(";")
    per = parse_list("]")
    expect("]")
    if pos != len(text):
        raise SeqParseError("trailing input", pos)
    if not per:
        raise SeqParseError("period must be nonempty", pos - 1)
    return EPSeq(pre, per)


def _atom_cap() -> int:
    cap = MAX_ATOMS
    env = os.environ.get("CONVLAB_MAX_ATOMS")
    if env is not None:
        try:
            requested = int(env)
        except ValueError:
            raise click.UsageError(f"CONVLAB_MAX_ATOMS must be an integer, got {env!r}")
        if requested >= 1:
            cap = min(cap, requested)
    return cap


def _carrier(atoms: int) -> Carrier:
    cap = _atom_cap()
    if not 1 <= atoms <= cap:
        raise click.UsageError(f"--atoms must be in 1..{cap}, got {atoms}")
    return Carrier(atoms)


@click.group()
def main() -> None:
    """Convergences, sequential topologies and submeasure metrics on P(n)."""


@main.command()
@click.option("--atoms", type=int, default=3, show_default=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["dot", "json", "table"]),
    default="table",
    show_default=True,
)
def diagram(atoms: int, fmt: str) -> None:
    """Build the convergence/topology diagram and verify its relations."""
    carrier = _carrier(atoms)
    try:
        report = build_figure1(carrier)
    except RelationViolation as exc:
        click.echo(f"relation violated: {exc}", err=True)
        sys.exit(1)
    click.echo(emit(report, fmt), nl=False)


@main.command()
@click.option("--atoms", type=int, default=2, show_default=True)
@click.option("--seq", required=True, help="sequence literal, e.g. '[{0,1};{0},{1}]'")
@click.option("--law", type=click.Choice(["ls", "li", "s"]), default="ls", show_default=True)
def converge(atoms: int, seq: str, law: str) -> None:
    """Print the limit set of an eventually periodic sequence."""
    carrier = _carrier(atoms)
    try:
        x = parse_seq_literal(seq, carrier)
    except SeqParseError as exc:
        raise click.UsageError(f"bad sequence literal: {exc}")
    builders = {"ls": lambda_ls, "li": lambda_li, "s": lambda_s}
    limits = builders[law](carrier)(inf_class(x))
    for e in sorted(limits, key=lambda e: e.mask):
        click.echo(f"mask={e.mask} atoms={e!r}")
    if not limits:
        click.echo("(no limits)")


@main.command()
@click.option("--atoms", type=int, default=3, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--samples", type=int, default=1000, show_default=True)
@click.option(
    "--submeasure",
    "submeasure_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="extra submeasure table to validate (lines: mask num/den)",
)
def verify(atoms: int, seed: int, samples: int, submeasure_path) -> None:
    """Run every verification criterion at the requested scale."""
    _carrier(atoms)
    if samples < 1:
        raise click.UsageError("--samples must be at least 1")
    ctx = VerifyContext(
        atoms=atoms, seed=seed, samples=samples, submeasure_path=submeasure_path
    )
    results = run_all(ctx)
    click.echo(format_results(results))
    sys.exit(0 if all(r.passed for r in results) else 1)


if __name__ == "__main__":
    main()
