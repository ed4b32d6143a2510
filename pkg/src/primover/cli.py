"""Command-line interface: classify, search, cosets, generate, verify.

Exit codes: 0 success, 2 usage or domain error, 3 partial results (some
inputs skipped because the factoring budget ran out).
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from math import gcd

import click

from primover import core_arith, cosets, cyclotomic, serialize
from primover.classify import (
    classify as classify_report,
    is_overpseudoprime_fast,
    is_strong_psp,
    is_super_psp,
)
from primover.core_arith import (
    IncompleteFactorizationError,
    NotCoprimeError,
    factorize,
    is_prime,
    smallest_factor_table,
)

SEARCH_CLASSES = ("fermat", "strong", "super", "over", "primover")


@dataclass(frozen=True)
class SearchQuery:
    base: int
    lo: int
    hi: int
    target: str
    jobs: int = 1

    def __post_init__(self):
        if self.lo < 2:
            raise ValueError(f"search range must start at 2 or above, got {self.lo}")
        if self.hi < self.lo:
            raise ValueError(f"empty range [{self.lo}, {self.hi}]")
        if self.target not in SEARCH_CLASSES:
            raise ValueError(f"unknown class {self.target!r}")


def _matches(b: int, n: int, target: str) -> bool:
    if target == "fermat":
        return pow(b, n - 1, n) == 1
    if target == "strong":
        return is_strong_psp(b, n)
    fact = factorize(n)
    if target == "super":
        return is_super_psp(b, n, fact=fact)
    # over / primover; primes were already filtered out, so both coincide
    return is_overpseudoprime_fast(b, n, fact=fact)


def _search_chunk(args) -> tuple[list[int], list[int]]:
    """Scan [lo, hi] for odd composite n coprime to b in the target class.

    Returns (hits, skipped); skipped lists n whose factorization exceeded
    the budget.
    """
    b, lo, hi, target = args
    hits: list[int] = []
    skipped: list[int] = []
    spf = smallest_factor_table(core_arith.SMALL_FACTOR_TABLE_LIMIT) \
        if hi <= core_arith.SMALL_FACTOR_TABLE_LIMIT else None
    start = lo | 1
    for n in range(max(start, 3), hi + 1, 2):
        if gcd(b, n) != 1:
            continue
        if spf is not None:
            if int(spf[n]) == n:
                continue
        elif is_prime(n):
            continue
        try:
            if _matches(b, n, target):
                hits.append(n)
        except IncompleteFactorizationError:
            skipped.append(n)
    return hits, skipped


def run_search(query: SearchQuery) -> tuple[list[int], list[int]]:
    """Execute a search, in parallel when query.jobs > 1; hits ascending."""
    if query.jobs <= 1:
        return _search_chunk((query.base, query.lo, query.hi, query.target))
    import multiprocessing as mp

    span = query.hi - query.lo + 1
    chunk = max(1, span // (query.jobs * 8))
    tasks = []
    lo = query.lo
    while lo <= query.hi:
        hi = min(lo + chunk - 1, query.hi)
        tasks.append((query.base, lo, hi, query.target))
        lo = hi + 1
    with mp.Pool(query.jobs) as pool:
        results = pool.map(_search_chunk, tasks)
    hits: list[int] = []
    skipped: list[int] = []
    for h, s in results:
        hits.extend(h)
        skipped.extend(s)
    return hits, skipped


def _common_options(fn):
    fn = click.option("--base", "-b", default=2, show_default=True,
                      help="Base b of the congruences.")(fn)
    fn = click.option("--mr-rounds", default=0, show_default=True,
                      help="Extra random strong-pseudoprime rounds for large inputs.")(fn)
    fn = click.option("--factor-budget", default=core_arith.DEFAULT_FACTOR_BUDGET,
                      show_default=True,
                      help="Multiplication budget for the factoring stage.")(fn)
    fn = click.option("--seed", default=0, show_default=True,
                      help="Seed for the randomized factorizer.")(fn)
    return fn


def _apply_config(mr_rounds: int, factor_budget: int, seed: int) -> None:
    core_arith.configure(extra_rounds=mr_rounds, factor_budget=factor_budget,
                         seed=seed)


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


@click.group()
def main():
    """Classify integers along the pseudoprime hierarchy and generate
    primover number families."""


@main.command("classify")
@click.argument("n", type=str)
@_common_options
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]),
              default="text", show_default=True)
def cmd_classify(n, base, mr_rounds, factor_budget, seed, fmt):
    """Full pseudoprime classification of N."""
    _apply_config(mr_rounds, factor_budget, seed)
    try:
        value = int(n)
    except ValueError:
        _fail(f"not an integer: {n!r}")
    try:
        report = classify_report(base, value)
    except (NotCoprimeError, ValueError) as err:
        _fail(str(err))
    if fmt == "json":
        click.echo(serialize.report_to_json(report))
    elif fmt == "csv":
        click.echo(serialize.report_to_csv(report))
    else:
        click.echo(serialize.report_to_text(report))
    if not report.complete:
        sys.exit(3)


@main.command("search")
@_common_options
@click.option("--class", "target", type=click.Choice(SEARCH_CLASSES), default="over",
              show_default=True, help="Pseudoprime class to search for.")
@click.option("--min", "lo", default=2, show_default=True)
@click.option("--max", "hi", required=True, type=int)
@click.option("--jobs", default=1, show_default=True,
              help="Worker processes for the range scan.")
def cmd_search(base, mr_rounds, factor_budget, seed, target, lo, hi, jobs):
    """List members of a pseudoprime class in [--min, --max]."""
    _apply_config(mr_rounds, factor_budget, seed)
    t0 = time.monotonic()
    try:
        query = SearchQuery(base=base, lo=lo, hi=hi, target=target, jobs=jobs)
    except ValueError as err:
        _fail(str(err))
    hits, skipped = run_search(query)
    for n in hits:
        click.echo(n)
    elapsed = time.monotonic() - t0
    click.echo(f"# count={len(hits)} elapsed={elapsed:.3f}s", err=True)
    for n in skipped:
        click.echo(f"# skipped {n}: factoring budget exhausted", err=True)
    if skipped:
        sys.exit(3)


@main.command("cosets")
@click.argument("n", type=int)
@_common_options
def cmd_cosets(n, base, mr_rounds, factor_budget, seed):
    """Print the cyclotomic cosets of BASE modulo N."""
    _apply_config(mr_rounds, factor_budget, seed)
    try:
        partition = cosets.coset_partition(base, n)
    except (NotCoprimeError, ValueError) as err:
        _fail(str(err))
    for coset in partition.cosets:
        elements = ", ".join(str(x) for x in coset)
        click.echo(f"C_{coset[0]} = {{{elements}}}")


@main.command("generate")
@click.argument("family", type=click.Choice(
    ["fermat", "mersenne", "phi-pq", "phi-prime-power", "moebius-product"]))
@_common_options
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
@click.option("--p", "p", type=int, default=None, help="Prime parameter.")
@click.option("--q", "q", type=int, default=None, help="Smaller prime (phi-pq).")
@click.option("--n", "n", type=int, default=None,
              help="Exponent (fermat, phi-prime-power) or index (moebius-product).")
def cmd_generate(family, base, mr_rounds, factor_budget, seed, fmt, p, q, n):
    """Generate one member of a primover family and verify it."""
    _apply_config(mr_rounds, factor_budget, seed)
    try:
        if family == "fermat":
            if n is None:
                _fail("fermat requires --n")
            fam = cyclotomic.gen_fermat(base, n)
        elif family == "mersenne":
            if p is None:
                _fail("mersenne requires --p")
            fam = cyclotomic.gen_mersenne(base, p)
        elif family == "phi-pq":
            if p is None or q is None:
                _fail("phi-pq requires --p and --q")
            fam = cyclotomic.phi_pq(base, q, p)
        elif family == "phi-prime-power":
            if p is None or n is None:
                _fail("phi-prime-power requires --p and --n")
            fam = cyclotomic.phi_prime_power(base, p, n)
        else:
            if n is None:
                _fail("moebius-product requires --n")
            fam = cyclotomic.moebius_product(base, n)
    except (NotCoprimeError, ValueError) as err:
        _fail(str(err))
    if fmt == "json":
        click.echo(serialize.family_to_json(fam))
    else:
        click.echo(serialize.family_to_text(fam))


@main.command("verify")
@click.option("--bfile", "bfile", required=True,
              type=click.Path(exists=True, dir_okay=False))
@_common_options
@click.option("--class", "target", type=click.Choice(SEARCH_CLASSES), default="over",
              show_default=True)
@click.option("--max", "hi", required=True, type=int)
def cmd_verify(bfile, base, mr_rounds, factor_budget, seed, target, hi):
    """Cross-check a b-file against the locally computed sequence."""
    _apply_config(mr_rounds, factor_budget, seed)
    try:
        entries = serialize.parse_bfile(bfile)
    except serialize.BFileFormatError as err:
        _fail(str(err))
    if not entries:
        click.echo("no entries")
        return
    hits, skipped = run_search(SearchQuery(base=base, lo=2, hi=hi, target=target))
    for k, entry in enumerate(entries):
        if k < len(hits):
            if entry.value != hits[k]:
                click.echo(
                    f"mismatch at index {entry.index}: "
                    f"file has {entry.value}, computed {hits[k]}")
                sys.exit(1)
        elif entry.value <= hi:
            click.echo(
                f"mismatch at index {entry.index}: "
                f"file has {entry.value}, not found below {hi}")
            sys.exit(1)
        else:
            # beyond the computed range; cannot be checked
            entries = entries[:k]
            break
    if len(entries) < len(hits):
        missing = hits[len(entries)]
        click.echo(f"mismatch: computed {missing} missing from file")
        sys.exit(1)
    last = entries[-1].index if entries else "none"
    click.echo(f"agree through index {last} ({len(entries)} entries)")
    if skipped:
        sys.exit(3)


if __name__ == "__main__":
    main()
