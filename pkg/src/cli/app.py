import argparse
import json
import os
import sys
from typing import List, Optional

from loguru import logger

from ..config import LOG_DIR, LOG_LEVEL, Settings, load_settings
from ..endoscopy import elliptic_decompose, enumerate_elliptic, validate
from ..errors import DomainError
from ..jordan import (
    jordan_blocks, maximal_summands, pole_profile, reconstruct, t_set
)
from ..kernel_cases import basic_triangles, build_tower, compile_case, to_dot
from ..orbits import (
    coefficient_kind, grading, orbit_family_of, stabilizer, unipotent_dims
)
from ..parameters import (
    ArthurParameter, Base, CuspidalDatum, Duality, GroupDatum, SimpleParameter, classify
)
from ..partitions import OrbitFamily, bv_dual, parse_partition
from ..reports import AuditRunner
from ..serialization import (
    check_input, dumps, load_json, load_pool, parameter_from_dict, profile_from_dict
)
from ..spectral import (
    PoleCase, beta_factors, factorization_pairs, pole_case, residual_points, rho_pair, to_latex, x_plus
)


def configure_logging(level: Optional[str] = None):
    """stderr sink at LOG_LEVEL, plus a rotating file sink when LOG_DIR is set."""
    logger.remove()
    logger.add(sys.stderr, level=(level or LOG_LEVEL).upper())
    if LOG_DIR:
        os.makedirs(LOG_DIR, exist_ok=True)
        logger.add(os.path.join(LOG_DIR, "arthurkit_{time}.log"), rotation="1 week",
                   level="DEBUG")


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _bool(text: str) -> bool:
    value = text.strip().lower()
    if value in ('true', 'yes', '1'):
        return True
    if value in ('false', 'no', '0'):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text}")


class Commands:
    """One handler per subcommand; each returns the text written to stdout."""

    def __init__(self, settings: Settings):
        self.settings = settings
        self.pool = load_pool(settings.tau_pool)

    def _parameter(self, path: str) -> ArthurParameter:
        return parameter_from_dict(load_json(path), self.pool)

    def _tau(self, tau_id: str, path: Optional[str] = None) -> CuspidalDatum:
        pool = dict(self.pool)
        if path:
            record = load_json(path)
            check_input(record, 'parameter_input')
            pool.update(load_pool(record.get('taus', [])))
        if tau_id not in pool:
            raise DomainError(f"unknown tau id {tau_id}", code="unknown_tau")
        return pool[tau_id]

    def dual(self, args) -> str:
        try:
            source, target = (OrbitFamily(x.strip().upper()) for x in args.family.split(':'))
        except ValueError:
            raise DomainError(f"--family must look like C:B, got {args.family}", code="bad_literal")
        result = bv_dual(parse_partition(args.partition), source, target)
        if args.json:
            return dumps({'source': source.value, 'target': target.value,
                          'partition': parse_partition(args.partition), 'dual': result})
        return json.dumps(result.to_list(), separators=(',', ':'))

    def classify(self, args) -> str:
        psi = self._parameter(args.param)
        groups = classify(psi, args.kappa)
        return dumps({'parameter': psi, 'groups': groups})

    def endoscopy(self, args) -> str:
        G = GroupDatum.parse(args.group)
        if args.tau:
            psi1 = SimpleParameter(self._tau(args.tau, args.rest), args.b)
            psi2 = self._parameter(args.rest) if args.rest else ArthurParameter()
            data = [elliptic_decompose(G, psi1, psi2)]
        else:
            data = enumerate_elliptic(G)
        records = []
        for E in data:
            ok, reasons = validate(E)
            records.append({'datum': E, 'description': E.describe(), 'valid': ok, 'reasons': reasons})
        return dumps({'group': G, 'data': records})

    def orbit(self, args) -> str:
        fam = orbit_family_of(args.family)
        p = parse_partition(args.partition)
        g = grading(fam, p)
        out = {'family': fam.value, 'partition': p, 'weights': list(g.weights),
               'dims': {str(j): n for j, n in g.dims}, 'unipotent': unipotent_dims(g),
               'coefficient': None, 'stabilizer': None}
        distinct = sorted(set(p.parts), reverse=True)
        if distinct and distinct[0] > 1 and (len(distinct) == 1 or distinct[1:] == [1]):
            d = distinct[0]
            c, r = p.multiplicity(d), p.multiplicity(1)
            if r:
                out['coefficient'] = coefficient_kind(fam, d, c, r)
            out['stabilizer'] = list(stabilizer(args.family, p.total, d, c))
        return dumps(out)

    def beta(self, args) -> str:
        family = args.family
        if family.upper() == 'U':
            if args.n is None:
                raise DomainError("--n is required for unitary normalizers", code="invalid_parameter")
            family = 'U_even' if args.n % 2 == 0 else 'U_odd'
        factors = beta_factors(family, args.b, n0_zero=args.n0_zero)
        if args.latex:
            return to_latex(factors)
        out = {'family': family, 'b': args.b, 'rho': list(rho_pair(family)), 'factors': factors,
               'pairs': [{'index': p['index'], 'identity': p['identity']} for p in factorization_pairs(factors)]}
        if args.case is not None:
            out['case'] = args.case
            out['x_plus'] = x_plus(args.b, PoleCase(args.case))
            out['residual_points'] = residual_points(args.b, PoleCase(args.case))
        return dumps(out)

    def poles(self, args) -> str:
        case = PoleCase(args.case) if args.case else pole_case(args.rho_pole, args.second)
        return dumps({'b': args.b, 'case': int(case), 'x_plus': x_plus(args.b, case),
                      'residual_points': residual_points(args.b, case)})

    def compile(self, args) -> str:
        if args.tau_type == 'unitary':
            tau = CuspidalDatum(id=args.tau_id, a=args.a, base=Base.QUADRATIC_EXT, eta=args.eta)
        else:
            tau = CuspidalDatum(id=args.tau_id, a=args.a, duality=Duality.parse(args.tau_type),
                                central_nonvanishing=args.L_half_nonzero)
        case = compile_case(args.target, tau, args.b, args.c, kappa=args.kappa, extended=args.extended)
        return dumps(case)

    def tower(self, args) -> str:
        base = GroupDatum.parse(args.base)
        psi_base = self._parameter(args.param) if args.param else ArthurParameter()
        tower = build_tower(base, psi_base, self._tau(args.tau, args.param), args.steps)
        return to_dot(tower) if args.dot else dumps(tower)

    def triangle(self, args) -> str:
        record = basic_triangles(self._tau(args.tau, args.taus), args.l)
        return to_dot(record) if args.dot else dumps(record)

    def jordan(self, args) -> str:
        if args.reconstruct:
            profile = profile_from_dict(load_json(args.reconstruct), self.pool)
            dims = dict(self._dims(args.dims))
            psi = reconstruct(profile, dims, args.N, default_duality=Duality.parse(args.duality))
            return dumps({'profile': profile, 'parameter': psi})
        if not args.param:
            raise DomainError("jordan needs --param or --reconstruct", code="invalid_argument")
        psi = self._parameter(args.param)
        return dumps({
            'parameter': psi,
            'profile': pole_profile(psi),
            't_set': sorted(t_set(psi)),
            'blocks': {tau_id: jordan_blocks(psi, tau_id) for tau_id in sorted(t_set(psi))},
            'maximal': [{'tau': sp.tau.id, 'b': sp.b} for sp in maximal_summands(psi)],
        })

    @staticmethod
    def _dims(items: Optional[List[str]]):
        for item in items or []:
            tau_id, _, a = item.partition('=')
            if not a.isdigit():
                raise DomainError(f"--dims expects id=a, got {item}", code="bad_literal")
            yield tau_id, int(a)

    def audit(self, args) -> str:
        runner = AuditRunner(self.settings, max_N=args.max_N)
        df = runner.run()
        self.audit_failures = int(df['failures'].sum())
        if args.format == 'json':
            return dumps(runner.summary(df))
        return runner.render_text(df)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='arthurkit',
                                     description='Combinatorial bookkeeping for Arthur parameters')
    parser.add_argument('--config', help='YAML settings file (overrides ARTHURKIT_CONFIG)')
    parser.add_argument('--log-level', help='override LOG_LEVEL')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('dual', help='Barbasch-Vogan dual of a partition')
    p.add_argument('--family', required=True, help='dual:target, e.g. C:B')
    p.add_argument('--partition', required=True)
    p.add_argument('--json', action='store_true')

    p = sub.add_parser('classify', help='groups a parameter lives on')
    p.add_argument('--param', required=True)
    p.add_argument('--kappa', type=int, choices=[1, -1])

    p = sub.add_parser('endoscopy', help='elliptic endoscopy data of a group')
    p.add_argument('--group', required=True, help='e.g. "Sp(4)" or "U(5,+)"')
    p.add_argument('--tau', help='tau id of the split summand; omit to enumerate')
    p.add_argument('--b', type=int, default=1)
    p.add_argument('--rest', help='parameter file for the remaining summands')

    p = sub.add_parser('orbit', help='grading and Fourier coefficient data of an orbit')
    p.add_argument('--family', required=True)
    p.add_argument('--partition', required=True)

    p = sub.add_parser('beta', help='normalizing factors of the residual Eisenstein series')
    p.add_argument('--family', required=True, help='SOodd, Sp, SOeven, U_even, U_odd or U')
    p.add_argument('--b', type=int, required=True)
    p.add_argument('--n', type=int, help='rank parity for U')
    p.add_argument('--case', type=int, choices=[1, 2, 3, 4])
    p.add_argument('--n0-zero', action='store_true')
    p.add_argument('--latex', action='store_true')

    p = sub.add_parser('poles', help='candidate poles and residual annotations')
    p.add_argument('--b', type=int, required=True)
    p.add_argument('--case', type=int, choices=[1, 2, 3, 4])
    p.add_argument('--rho-pole', type=_bool, default=True)
    p.add_argument('--second', type=_bool, default=True)

    p = sub.add_parser('compile', help='construction data for a target, tau, b and c')
    p.add_argument('--target', required=True)
    p.add_argument('--a', type=int, required=True)
    p.add_argument('--b', type=int, required=True)
    p.add_argument('--c', type=int, required=True)
    p.add_argument('--tau-type', required=True, choices=['orthogonal', 'symplectic', 'unitary'])
    p.add_argument('--tau-id', default='tau')
    p.add_argument('--eta', type=int, choices=[1, -1], default=1)
    p.add_argument('--kappa', type=int, choices=[1, -1], default=1)
    p.add_argument('--extended', action='store_true')
    p.add_argument('--L-half-nonzero', type=_bool, default=True, dest='L_half_nonzero')

    p = sub.add_parser('tower', help='tower of constructions for a fixed tau')
    p.add_argument('--base', required=True)
    p.add_argument('--param', help='parameter file of the base')
    p.add_argument('--tau', required=True)
    p.add_argument('--steps', type=int, default=3)
    p.add_argument('--dot', action='store_true')

    p = sub.add_parser('triangle', help='basic and dual triangles')
    p.add_argument('--tau', required=True)
    p.add_argument('--taus', help='file with extra tau records')
    p.add_argument('--l', type=int, required=True)
    p.add_argument('--dot', action='store_true')

    p = sub.add_parser('jordan', help='Jordan blocks and reconstruction from poles')
    p.add_argument('--param')
    p.add_argument('--reconstruct', help='pole profile file')
    p.add_argument('--N', type=int)
    p.add_argument('--dims', nargs='*', help='id=a pairs for taus without records')
    p.add_argument('--duality', default='Orthogonal', help='duality type of the ids given only by --dims')

    p = sub.add_parser('audit', help='run the consistency sweeps')
    p.add_argument('--max-N', type=int, dest='max_N')
    p.add_argument('--format', choices=['text', 'json'], default='text')
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        commands = Commands(load_settings(args.config))
        if args.command == 'jordan' and args.reconstruct and args.N is None:
            raise DomainError("--reconstruct needs --N", code="invalid_argument")
        output = getattr(commands, args.command)(args)
    except DomainError as e:
        logger.error(f"{args.command}: {e.message}")
        sys.stderr.write(json.dumps(e.to_dict(), sort_keys=True) + "\n")
        return 1
    _emit(output)
    if args.command == 'audit' and commands.audit_failures:
        return 1
    return 0


def main():
    sys.exit(run())
