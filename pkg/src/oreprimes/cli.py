"""Batch front door: parse a run configuration, dispatch one command, and
write a deterministic structured report.

Commands
--------
check-domain      validate the (sigma, delta) configuration
classify          classify an ideal as a contraction (verdict + witnesses)
enumerate-minimal sigma-prime contractions of minimal primes (inner delta)
largest-stable    largest (sigma, delta)-stable ideal inside a prime
verify            fast-path vs. brute-force oracle agreement suite

Reports are JSON with sorted keys and no timestamps, so identical
(config, seed) pairs produce byte-identical files; they are written
atomically (temp file + rename).

Exit codes: 0 success; 2 config/usage error; 3 invalid domain;
4 precondition violation; 5 budget exhausted / undecided;
6 oracle disagreement.
"""

import argparse
import json
import os
import sys
import tempfile

from . import __version__
from .domains import build_domain, inner_witness
from .errors import (DomainError, FactorBudgetError, OracleDisagreement,
                     ParseError, PreconditionError, UndecidedError)
from .ideals import Ideal, ideal_from_json, ideal_make
from .oracle import (OracleBudget, brute_is_sigma_delta_prime,
                     brute_largest_stable, enumerate_ideals,
                     enumerate_stable_ideals)
from .primestruct import (VerdictKind, classify_contraction,
                          is_sigma_delta_prime, largest_stable_ideal,
                          minimal_primes_inner)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_PRECONDITION = 4
EXIT_UNDECIDED = 5
EXIT_DISAGREEMENT = 6

COMMANDS = ('check-domain', 'classify', 'enumerate-minimal',
            'largest-stable', 'verify')


class RunConfig:
    """Everything one run needs; reproducible given (config, version)."""

    __slots__ = ('domain_spec', 'command', 'ideal_gens', 'norm_bound',
                 'budget', 'samples', 'seed', 'out_path')

    def __init__(self, domain_spec, command, ideal_gens=None, norm_bound=27,
                 budget=64, samples=500, seed=0, out_path=None):
        if command not in COMMANDS:
            raise ParseError(f'unknown command {command!r}; pick one of {COMMANDS}')
        self.domain_spec = domain_spec
        self.command = command
        self.ideal_gens = ideal_gens or []
        self.norm_bound = int(norm_bound)
        self.budget = int(budget)
        self.samples = int(samples)
        self.seed = int(seed)
        self.out_path = out_path

    @classmethod
    def load(cls, args):
        data = {}
        if args.config:
            try:
                with open(args.config) as fh:
                    data = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise ParseError(f'cannot read config {args.config}: {exc}') from exc
        command = args.command or data.get('command')
        if not command:
            raise ParseError('no command given (flag --command or config field)')
        domain_spec = data.get('domain')
        if domain_spec is None:
            raise ParseError('no domain description in the config')
        gens = data.get('ideal', [])
        if args.ideal is not None:
            gens = [s.strip() for s in args.ideal.split(',') if s.strip()]
        elif isinstance(gens, str):
            gens = [s.strip() for s in gens.split(',') if s.strip()]
        return cls(
            domain_spec, command, ideal_gens=gens,
            norm_bound=args.norm_bound if args.norm_bound is not None
            else data.get('norm_bound', 27),
            budget=args.budget if args.budget is not None else data.get('budget', 64),
            samples=args.samples if args.samples is not None else data.get('samples', 500),
            seed=args.seed if args.seed is not None else data.get('seed', 0),
            out_path=args.out or data.get('out'),
        )

    def echo(self):
        return {'command': self.command, 'domain': self.domain_spec,
                'ideal': list(self.ideal_gens), 'norm_bound': self.norm_bound,
                'budget': self.budget, 'samples': self.samples, 'seed': self.seed}


def _parse_ideal(dom, gens):
    if not gens:
        raise PreconditionError('this command needs --ideal generators')
    return ideal_make(dom, [dom.parse_element(s) for s in gens])


def run_check_domain(dom, config):
    report = {'domain': dom.describe()}
    try:
        witness = inner_witness(dom)
        report['inner_witness'] = (dom.format_element(witness)
                                   if witness is not None else None)
    except PreconditionError:
        report['inner_witness'] = 'not applicable'
    return report, EXIT_OK


def run_classify(dom, config):
    p = _parse_ideal(dom, config.ideal_gens)
    verdict = classify_contraction(dom, p, budget=config.budget)
    code = EXIT_UNDECIDED if verdict.kind == VerdictKind.UNDECIDED else EXIT_OK
    return {'classification': verdict.to_json()}, code


def run_enumerate_minimal(dom, config):
    primes = minimal_primes_inner(dom, config.norm_bound)
    return {
        'minimal_prime_contractions': [p.to_json() for p in primes],
        'note': ('each listed ideal p extends to the minimal prime '
                 'p[x; sigma, delta]; primes meeting the coefficient ring '
                 'in zero are also minimal but are not enumerated'),
    }, EXIT_OK


def run_largest_stable(dom, config):
    p = _parse_ideal(dom, config.ideal_gens)
    m = largest_stable_ideal(dom, p, budget=config.budget)
    return {'largest_stable_ideal': m.to_json(), 'p': p.to_json()}, EXIT_OK


def run_verify(dom, config):
    """Fast-path vs. oracle agreement over every in-budget instance."""
    budget = OracleBudget(config.norm_bound, max_exponent=8,
                          sample_count=config.samples, seed=config.seed)
    ideals = enumerate_ideals(dom, config.norm_bound)
    prime_agreements, disagreements = [], []
    for I in ideals:
        fast = is_sigma_delta_prime(dom, I, bound=config.budget)
        brute = brute_is_sigma_delta_prime(dom, I, budget)
        prime_agreements.append({'instance': str(I), 'fast_path_result': fast,
                                 'oracle_result': brute, 'agree': fast == brute})
        if fast != brute:
            disagreements.append(str(I))
    largest_agreements = []
    wide = OracleBudget(max(config.norm_bound, config.norm_bound ** 2),
                        max_exponent=8)
    for P in ideals:
        if not P.is_prime_ideal():
            continue
        try:
            fast = largest_stable_ideal(dom, P, budget=config.budget)
        except UndecidedError:
            continue
        brute, flagged = brute_largest_stable(dom, P, wide)
        agree = flagged or fast == brute
        largest_agreements.append({'instance': str(P),
                                   'fast_path_result': str(fast),
                                   'oracle_result': str(brute),
                                   'oracle_flagged': flagged,
                                   'agree': agree})
        if not agree:
            disagreements.append(str(P))
    report = {
        'stable_ideal_count': len(enumerate_stable_ideals(dom, budget)),
        'sigma_delta_prime_checks': len(prime_agreements),
        'sigma_delta_prime_agree': sum(1 for r in prime_agreements if r['agree']),
        'largest_stable_checks': len(largest_agreements),
        'largest_stable_agree': sum(1 for r in largest_agreements if r['agree']),
        'disagreements': disagreements,
        'details': {'sigma_delta_prime': prime_agreements,
                    'largest_stable': largest_agreements},
    }
    if disagreements:
        raise OracleDisagreementReport(report)
    return report, EXIT_OK


class OracleDisagreementReport(OracleDisagreement):
    def __init__(self, report):
        super().__init__(f"oracle disagreement on {report['disagreements']}")
        self.report = report


_RUNNERS = {
    'check-domain': run_check_domain,
    'classify': run_classify,
    'enumerate-minimal': run_enumerate_minimal,
    'largest-stable': run_largest_stable,
    'verify': run_verify,
}


def execute(config):
    """Dispatch one RunConfig; returns (report dict, exit code)."""
    report = {'version': __version__, 'config': config.echo()}
    try:
        dom = build_domain(config.domain_spec)
    except DomainError as exc:
        report['error'] = {'kind': 'invalid-domain', 'message': str(exc)}
        return report, EXIT_DOMAIN
    try:
        body, code = _RUNNERS[config.command](dom, config)
    except OracleDisagreementReport as exc:
        report['result'] = exc.report
        report['error'] = {'kind': 'oracle-disagreement', 'message': str(exc)}
        return report, EXIT_DISAGREEMENT
    except (UndecidedError, FactorBudgetError) as exc:
        report['error'] = {'kind': 'budget-exhausted', 'message': str(exc)}
        return report, EXIT_UNDECIDED
    except (PreconditionError, ParseError) as exc:
        report['error'] = {'kind': 'precondition', 'message': str(exc)}
        return report, EXIT_PRECONDITION
    report['result'] = body
    return report, code


def render_report(report):
    """Deterministic text form: JSON, sorted keys, fixed separators."""
    return json.dumps(report, indent=2, sort_keys=True) + '\n'


def write_report_atomic(text, path):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix='.oreprimes-')
    try:
        with os.fdopen(fd, 'w') as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def build_arg_parser():
    parser = argparse.ArgumentParser(
        prog='oreprimes',
        description='Skew-polynomial minimal-prime toolkit over exact '
                    'coefficient domains.')
    parser.add_argument('--config', help='JSON config file with RunConfig fields')
    parser.add_argument('--command', choices=COMMANDS)
    parser.add_argument('--ideal', help='comma-separated canonical element strings')
    parser.add_argument('--norm-bound', type=int, dest='norm_bound')
    parser.add_argument('--budget', type=int)
    parser.add_argument('--samples', type=int)
    parser.add_argument('--seed', type=int)
    parser.add_argument('--out', help='report output path')
    return parser


def main(argv=None):
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig.load(args)
    except ParseError as exc:
        print(f'config error: {exc}', file=sys.stderr)
        return EXIT_CONFIG
    report, code = execute(config)
    text = render_report(report)
    if config.out_path:
        write_report_atomic(text, config.out_path)
    sys.stdout.write(text)
    return code


if __name__ == '__main__':
    sys.exit(main())
