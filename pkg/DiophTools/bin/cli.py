import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from DiophTools.ChosenNum.arithmetic.rational import check_c, format_rational, to_rational
from DiophTools.ChosenNum.conf import run_config
from DiophTools.ChosenNum.errors import ChosenNumError, InvalidParameterError
from DiophTools.ChosenNum.ergodic.averages import ERGODIC_COLUMNS, convergence_series
from DiophTools.ChosenNum.ergodic.sparse import sparse_prime_set
from DiophTools.ChosenNum.hits.approximants import approximant_from_text, named_approximant
from DiophTools.ChosenNum.hits.hits import HIT_COLUMNS, fractional_hits, hit_primes
from DiophTools.ChosenNum.IO.NumIO import NumIO
from DiophTools.ChosenNum.log import get_logger, set_verbosity
from DiophTools.ChosenNum.primes.harmonic import harmonic_sum
from DiophTools.ChosenNum.primes.sieve import cached_sieve, count_primes
from DiophTools.ChosenNum.sequences.blocks import block_construction
from DiophTools.ChosenNum.sequences.builders import constant_sequence, greedy_sequence, random_sequence
from DiophTools.ChosenNum.sequences.sequence import load_sequence, save_sequence, uncovered_measure
from DiophTools.ChosenNum.sievelab.expectation import (lemma_constant, omega_expectation_exact,
                                                       omega_expectation_mc)
from DiophTools.ChosenNum.sievelab.level_sets import alpha_and_markov, level_sets

logger = get_logger(__name__)

DEFAULT_C = "1/2"
SUBCOMMANDS = ("primes", "seq", "coverage", "sievelab", "hits", "fracparts", "ergodic")
BUILD_METHODS = ("random", "greedy", "blocks", "constant")


@dataclass
class RunConfig:
    """
    @brief Everything a run depends on; the same config always gives the same bytes.

    Rationals (c, x for hits/fracparts, eta, epsilons) stay strings until
    the run parses them.
    """

    subcommand: str
    c: Optional[str] = None
    bound: Optional[int] = None
    x: Optional[str] = None
    y: Optional[str] = None
    seed: int = run_config["default_seed"]
    trials: Optional[int] = None
    out_format: Optional[str] = None
    out_path: Optional[str] = None
    seq_path: Optional[str] = None
    method: Optional[str] = None
    epsilons: list = field(default_factory=list)
    max_bound: Optional[int] = None
    record: bool = False
    exact: bool = False
    x_named: Optional[str] = None
    eta: Optional[str] = None
    sparse: Optional[str] = None
    psi: Optional[str] = None
    kernel: str = "closed"
    workers: Optional[int] = None
    verbose: int = 0


class SequenceFileMissing(Exception):
    pass


FLAGS = {"seq_path": "--seq", "out_path": "--out", "x_named": "--x-named", "bound": "--bound"}


def _require(config, *names):
    for name in names:
        if getattr(config, name) is None:
            flag = FLAGS.get(name, "--" + name.replace("_", "-"))
            raise InvalidParameterError(f"{flag} is required for {config.subcommand}")


def _positive(value, name):
    if value is None or int(value) < 1:
        raise InvalidParameterError(f"{name} must be positive")
    return int(value)


def _float(text, name):
    try:
        return float(text)
    except ValueError:
        raise InvalidParameterError(f"{name} must be a number, got {text!r}") from None


def _radius(config):
    return check_c(DEFAULT_C if config.c is None else config.c)


def _load(config):
    _require(config, "seq_path")
    try:
        seq = load_sequence(config.seq_path)
    except FileNotFoundError:
        raise SequenceFileMissing() from None
    except ChosenNumError:
        raise
    except (json.JSONDecodeError, KeyError, TypeError, AttributeError, ValueError) as e:
        raise InvalidParameterError(f"invalid sequence file: {type(e).__name__} {e}") from None
    if config.c is not None and check_c(config.c) != seq.c:
        raise InvalidParameterError(f"--c {config.c} does not match the sequence file (c={format_rational(seq.c)})")
    return seq


def _real(config):
    if config.x_named is not None:
        _require(config, "eta")
        return named_approximant(config.x_named, config.eta)
    _require(config, "x")
    return approximant_from_text(config.x, config.eta)


def _primes_report(config):
    bound = _positive(config.bound, "bound")
    if config.out_format == "csv":
        primes = cached_sieve(bound).primes.tolist() if bound >= 2 else []
        return [[p] for p in primes], ["p"]
    H = harmonic_sum(1, bound)
    value = format_rational(H.value) if H.mode == "exact" else float(H.value)
    return {"bound": bound, "count": count_primes(bound), "harmonic_sum": value, "harmonic_mode": H.mode}


def _seq_build(config):
    _require(config, "method", "out_path")
    if config.method not in BUILD_METHODS:
        raise InvalidParameterError(f"unknown build method '{config.method}'")
    c = _radius(config)
    if config.method == "blocks":
        max_bound = _positive(config.max_bound or config.bound, "max-bound")
        epsilons = config.epsilons or ["1/2"]
        seq, schedule = block_construction(epsilons, c, max_bound, seed=config.seed)
        logger.info("blocks end at %s", schedule.boundaries)
    else:
        bound = _positive(config.bound, "bound")
        if config.method == "random":
            seq = random_sequence(bound, c, config.seed)
        elif config.method == "greedy":
            seq = greedy_sequence(bound, c, record=config.record)
        else:
            seq = constant_sequence(bound, c)
    return seq


def _coverage_report(config):
    seq = _load(config)
    _require(config, "x", "y")
    X, Y = to_rational(config.x), to_rational(config.y)
    uncovered = uncovered_measure(seq, X, Y)
    return {"range": [format_rational(X), format_rational(Y)],
            "c": format_rational(seq.c),
            "uncovered_measure": format_rational(uncovered),
            "covered_measure": format_rational(1 - uncovered)}


def _sievelab_report(config):
    _require(config, "x", "y")
    X, Y = to_rational(config.x), to_rational(config.y)
    report = {}
    if config.seq_path is not None:
        seq = _load(config)
        c = seq.c
        report.update(alpha_and_markov(level_sets(seq, X, Y)).to_json())
    else:
        c = _radius(config)
    if config.exact:
        report["expectation"] = format_rational(omega_expectation_exact(X, Y, c))
        report["lemma_constant"] = format_rational(lemma_constant(c))
    if config.trials is not None:
        estimate = omega_expectation_mc(X, Y, c, _positive(config.trials, "trials"), config.seed,
                                        workers=config.workers)
        report["monte_carlo"] = estimate.to_json()
    if not report:
        raise InvalidParameterError("sievelab needs --seq, --exact or --mc")
    report.setdefault("c", format_rational(c))
    return report


def _hits_report(config):
    seq = _load(config)
    report = hit_primes(_real(config), seq, _positive(config.bound, "bound"))
    if config.out_format == "csv":
        return report.csv_rows(), HIT_COLUMNS
    return report.to_json()


def _fracparts_report(config):
    report = fractional_hits(_real(config), _radius(config), _positive(config.bound, "bound"))
    if config.out_format == "csv":
        return report.csv_rows(), HIT_COLUMNS
    return report.to_json()


def _ergodic_report(config):
    seq = _load(config)
    _require(config, "x", "y", "bound")
    bound = _positive(config.bound, "primes-up-to")
    if config.sparse is not None:
        primes = list(sparse_prime_set(bound, config.sparse, config.psi).primes)
    else:
        primes = cached_sieve(bound).primes.tolist() if bound >= 2 else []
    samples = convergence_series(seq, _float(config.x, "x"), _float(config.y, "y"), primes, config.kernel)
    if config.out_format == "csv":
        return [s.csv_row() for s in samples], ERGODIC_COLUMNS
    return [dict(zip(ERGODIC_COLUMNS, s.csv_row())) for s in samples]


REPORTS = {
    "primes": _primes_report,
    "coverage": _coverage_report,
    "sievelab": _sievelab_report,
    "hits": _hits_report,
    "fracparts": _fracparts_report,
    "ergodic": _ergodic_report,
}


def render(config):
    """
    @brief Produces the output text of a run without writing anything.

    @return (text, sequence) where sequence is set only for "seq build".
    """
    if config.subcommand not in SUBCOMMANDS:
        raise InvalidParameterError(f"unknown subcommand '{config.subcommand}'")
    if config.out_format is None:
        config.out_format = "csv" if config.subcommand == "ergodic" else "json"
    if config.out_format not in ("json", "csv"):
        raise InvalidParameterError(f"unknown format '{config.out_format}'")
    if config.c is not None:
        check_c(config.c)
    if config.seed < 0:
        raise InvalidParameterError("seed must be a non-negative integer")
    if config.subcommand == "seq":
        seq = _seq_build(config)
        return NumIO.json_text(seq.to_json()), seq
    result = REPORTS[config.subcommand](config)
    if isinstance(result, tuple):
        rows, columns = result
        return NumIO.csv_text(rows, columns), None
    if config.out_format == "csv":
        raise InvalidParameterError(f"{config.subcommand} has no csv output")
    return NumIO.json_text(result), None


def run(config):
    """
    @brief Runs one configured experiment.

    The report goes to config.out_path or stdout. Errors print a single
    "error: ..." line on stderr and nothing is written.

    @return exit status (0 success, 2 error).
    """
    set_verbosity(config.verbose)
    try:
        text, seq = render(config)
    except SequenceFileMissing:
        print("error: sequence file not found", file=sys.stderr)
        return 2
    except ChosenNumError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if seq is not None:
        save_sequence(seq, config.out_path)
        logger.info("wrote %d entries to %s", len(seq), config.out_path)
    elif config.out_path:
        NumIO.save_text(config.out_path, text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="chosennum",
                                     description="Rational approximation with one chosen numerator per prime.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug (stderr)")
    parser.add_argument("--workers", type=int, default=None,
                        help=f"worker processes (default: ${run_config['workers_env']} or 1)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, out=True):
        p.add_argument("--c", default=None,
                       help=f"radius parameter in (0,1/2], e.g. 1/4 (default {DEFAULT_C}; taken from --seq files)")
        p.add_argument("--seed", type=int, default=run_config["default_seed"])
        if out:
            p.add_argument("--format", dest="out_format", choices=["json", "csv"], default=None)
            p.add_argument("--out", dest="out_path", default=None, help="output file (default stdout)")

    p = sub.add_parser("primes", help="pi(N) and the prime harmonic sum")
    p.add_argument("--bound", type=int, required=True)
    common(p)

    p = sub.add_parser("seq", help="build a numerator sequence")
    p.add_argument("action", choices=["build"])
    p.add_argument("--method", choices=BUILD_METHODS, required=True)
    p.add_argument("--bound", type=int)
    p.add_argument("--epsilons", default=None, help="comma separated block targets, e.g. 1/2,1/4")
    p.add_argument("--max-bound", type=int, default=None)
    p.add_argument("--record", action="store_true", help="keep greedy gains in the metadata")
    common(p)

    p = sub.add_parser("coverage", help="exact uncovered measure of a sequence over (X, Y]")
    p.add_argument("--seq", dest="seq_path", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    common(p)

    p = sub.add_parser("sievelab", help="level sets, alpha, Markov bound and E(lambda(Omega))")
    p.add_argument("--seq", dest="seq_path", default=None)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--exact", action="store_true", help="exact expectation over the product measure")
    p.add_argument("--mc", dest="trials", type=int, default=None, help="Monte-Carlo trials")
    common(p)

    for name, text in (("hits", "hit primes of x for a sequence"), ("fracparts", "primes with {xp} < c")):
        p = sub.add_parser(name, help=text)
        if name == "hits":
            p.add_argument("--seq", dest="seq_path", required=True)
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--x", default=None, help='rational such as "1/3"')
        group.add_argument("--x-named", default=None, choices=["sqrt2", "golden", "e"])
        p.add_argument("--eta", default=None, help="certified error bound, e.g. 1e-14")
        p.add_argument("--bound", type=int, required=True)
        common(p)

    p = sub.add_parser("ergodic", help="the averages s_p(x, y) along primes")
    p.add_argument("--seq", dest="seq_path", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--primes-up-to", dest="bound", type=int, required=True)
    p.add_argument("--sparse", choices=["geometric", "psi"], default=None)
    p.add_argument("--psi", default=None, help="log, loglog or sqrt_log (with --sparse psi)")
    p.add_argument("--kernel", choices=["closed", "direct"], default="closed")
    common(p)
    return parser


def config_from_args(args):
    values = vars(args).copy()
    values.pop("action", None)
    epsilons = values.pop("epsilons", None)
    config = RunConfig(**{k: v for k, v in values.items() if k in RunConfig.__dataclass_fields__})
    if epsilons:
        config.epsilons = [e.strip() for e in epsilons.split(",") if e.strip()]
    return config


def main(argv=None):
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
