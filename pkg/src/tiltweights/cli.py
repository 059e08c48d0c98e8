"""Command-line front end with a content-addressed table cache.

Every task prints one deterministic artifact to stdout; notes and errors
go to stderr.  Exit codes: 0 success, 1 verification failure, 2 usage or
internal error (with a JSON error record on stderr).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile

from . import __version__
from .coxeter import CoxeterSystem, Ideal, build_system
from .hecke import kl_P, kl_h, mu
from .laurent import SelfDualityError
from .tilting import (cross_validate, ic_matrix, invert_triangular,
                      pushforward_tilting, tilting_matrix)

_EPILOG = """\
words are comma-separated generator labels, e.g. "2,1,3,2"; "e" or "" is
the identity.  finite types number generators 1..n; affine types number
them 0..n with 0 the added node; --cartan matrices number rows 0..n-1.
non-reduced words are accepted and normalized.  the default cache
directory is $TILTWEIGHTS_CACHE_DIR, else ~/.cache/tiltweights.
"""

_CACHED_TASKS = frozenset({'tilting', 'ic', 'invert'})


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='tiltweights',
        description='exact weight tables on (affine) Weyl groups',
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--version', action='version',
                        version=f'tiltweights {__version__}')
    sub = parser.add_subparsers(dest='task', required=True)

    def common(p: argparse.ArgumentParser, truncation: bool = True):
        grp = p.add_mutually_exclusive_group(required=True)
        grp.add_argument('--type', dest='type_label', metavar='LABEL',
                         help='type label, e.g. "A3" or "affine A2"')
        grp.add_argument('--cartan', metavar='ROWS',
                         help='generalized Cartan matrix as JSON rows, '
                              'e.g. "[[2,-1],[-1,2]]"')
        if truncation:
            tg = p.add_mutually_exclusive_group()
            tg.add_argument('--top', metavar='WORD',
                            help='truncate to the ideal below this element')
            tg.add_argument('--max-length', metavar='N',
                            help='truncate to the ball of this radius; '
                                 '"all" means the whole group (finite types '
                                 'only)')
        p.add_argument('--format', choices=('json', 'csv', 'text'),
                       default='json')
        p.add_argument('--cache-dir', metavar='DIR',
                       help='override the table cache location')
        p.add_argument('--workers', type=int, metavar='N',
                       help='solve matrix columns with a thread pool')

    p = sub.add_parser('kl', help='one canonical-basis entry and its '
                                  'classical polynomial')
    common(p, truncation=False)
    p.add_argument('--pair', nargs=2, metavar=('X', 'Y'), required=True,
                   help='the two words, lower then upper')

    for name, text in [('tilting', 'weight table of self-dual '
                                   'indecomposables over the region'),
                       ('ic', 'weight table of self-dual simples over '
                              'the region'),
                       ('invert', 'exact inverse of the tilting table')]:
        p = sub.add_parser(name, help=text)
        common(p)

    p = sub.add_parser('push', help='push one tilting class through a '
                                    'parabolic quotient')
    common(p)
    p.add_argument('--word', required=True, metavar='WORD',
                   help='top element of the class to push')
    p.add_argument('--parabolic', required=True, metavar='LIST',
                   help='comma-separated generator labels; "" for the '
                        'empty set')
    p.add_argument('--side', choices=('left', 'right'), default='left')

    p = sub.add_parser('verify', help='run the full cross-validation '
                                      'battery over the region')
    common(p)
    p.add_argument('--parabolic', default='all', metavar='LIST|all',
                   help='subsets to push through: "all" tries every '
                        'subset generating a finite subgroup (default)')
    return parser


# ----------------------------------------------------------------------
# job assembly

def _system_for(args: argparse.Namespace) -> CoxeterSystem:
    if args.type_label is not None:
        return build_system(args.type_label)
    try:
        rows = json.loads(args.cartan)
    except json.JSONDecodeError as exc:
        raise _UsageError(f'--cartan is not valid JSON: {exc}') from None
    if (not isinstance(rows, list)
            or not all(isinstance(r, list) for r in rows)):
        raise _UsageError('--cartan must be a JSON list of integer rows')
    return build_system(rows)


def _region_for(sys_: CoxeterSystem, args: argparse.Namespace,
                required: bool = True) -> Ideal | None:
    top = getattr(args, 'top', None)
    max_length = getattr(args, 'max_length', None)
    if top is not None:
        return sys_.enumerate_ideal(sys_.parse_word(top))
    if max_length is not None:
        if max_length == 'all':
            if not sys_.is_finite_type():
                raise _UsageError(
                    f'infinite truncation request: {sys_.name} is not of '
                    'finite type, give --max-length a number or use --top')
            return sys_.enumerate_ideal(sys_.longest_element())
        try:
            radius = int(max_length)
        except ValueError:
            raise _UsageError(
                f'--max-length must be an integer or "all", '
                f'not {max_length!r}') from None
        if radius < 0:
            raise _UsageError('--max-length must be non-negative')
        return sys_.enumerate_ball(radius)
    if required:
        raise _UsageError('give a region: --top WORD or --max-length N')
    return None


def _parse_subset(sys_: CoxeterSystem, text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        labels = frozenset(int(part) for part in text.split(','))
    except ValueError:
        raise _UsageError(
            f'--parabolic must be comma-separated integers, '
            f'not {text!r}') from None
    bad = labels - set(sys_.labels)
    if bad:
        raise _UsageError(
            f'parabolic labels {sorted(bad)} outside generators '
            f'{sys_.labels}')
    return labels


# ----------------------------------------------------------------------
# cache

def _cache_dir(args: argparse.Namespace) -> str:
    if args.cache_dir:
        return args.cache_dir
    env = os.environ.get('TILTWEIGHTS_CACHE_DIR')
    if env:
        return env
    return os.path.join(os.path.expanduser('~'), '.cache', 'tiltweights')


def _job_key(sys_: CoxeterSystem, args: argparse.Namespace) -> dict:
    # canonical descriptor, not the raw flag text, so spellings of one
    # system share a cache entry
    return {
        'tool_version': __version__,
        'task': args.task,
        'cartan': [list(row) for row in sys_.cartan],
        'index_base': sys_.index_base,
        'label': sys_.descriptor.label,
        'top': getattr(args, 'top', None),
        'max_length': getattr(args, 'max_length', None),
        'format': args.format,
    }


def _with_cache(args: argparse.Namespace, sys_: CoxeterSystem,
                compute) -> str:
    key = _job_key(sys_, args)
    digest = hashlib.sha256(
        json.dumps(key, sort_keys=True).encode()).hexdigest()
    directory = _cache_dir(args)
    path = os.path.join(directory, digest + '.json')
    try:
        with open(path, encoding='utf-8') as fh:
            entry = json.load(fh)
        payload = entry['payload']
        stored = entry['payload_sha256']
        actual = hashlib.sha256(payload.encode()).hexdigest()
        if entry['tool_version'] != __version__:
            print(f'note: cache entry {digest[:12]} from version '
                  f'{entry["tool_version"]}, recomputing', file=sys.stderr)
        elif stored != actual:
            print(f'warning: cache entry {digest[:12]} corrupt '
                  '(digest mismatch), recomputing', file=sys.stderr)
        else:
            print(f'note: cache hit {digest[:12]}', file=sys.stderr)
            return payload
    except FileNotFoundError:
        pass
    except (json.JSONDecodeError, KeyError, TypeError):
        print(f'warning: cache entry {digest[:12]} unreadable, recomputing',
              file=sys.stderr)
    payload = compute()
    entry = {
        'tool_version': __version__,
        'key': key,
        'payload_sha256': hashlib.sha256(payload.encode()).hexdigest(),
        'payload': payload,
    }
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix='.tmp')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as fh:
            json.dump(entry, fh, indent=2)
        os.replace(tmp, path)   # atomic publish; readers never see partials
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    return payload


# ----------------------------------------------------------------------
# artifact rendering

def _dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + '\n'


def _run_kl(args: argparse.Namespace) -> tuple[str, int]:
    sys_ = _system_for(args)
    x = sys_.parse_word(args.pair[0])
    y = sys_.parse_word(args.pair[1])
    h = kl_h(x, y)
    record = {
        'system': sys_.descriptor.to_json_obj(),
        'x': sys_.format_word(x),
        'y': sys_.format_word(y),
        'h': h.to_json_obj(),
        'P': kl_P(x, y).to_json_obj() if not h.is_zero() else {},
        'mu': mu(x, y),
    }
    if args.format == 'json':
        return _dumps(record), 0
    p_str = kl_P(x, y).to_str('q') if not h.is_zero() else '0'
    if args.format == 'csv':
        return ('x,y,h,P,mu\n'
                f'"{record["x"]}","{record["y"]}",{h},{p_str},'
                f'{record["mu"]}\n'), 0
    return (f'system {sys_.name}\n'
            f'x  = {record["x"]}\n'
            f'y  = {record["y"]}\n'
            f'h  = {h}\n'
            f'P  = {p_str}\n'
            f'mu = {record["mu"]}\n'), 0


def _run_table(args: argparse.Namespace) -> tuple[str, int]:
    sys_ = _system_for(args)

    def compute() -> str:
        ideal = _region_for(sys_, args)
        if args.task == 'tilting':
            table = tilting_matrix(ideal, workers=args.workers)
        elif args.task == 'ic':
            table = ic_matrix(ideal, workers=args.workers)
        else:
            table = invert_triangular(
                tilting_matrix(ideal, workers=args.workers))
        if args.format == 'json':
            return _dumps(table.to_json_obj())
        if args.format == 'csv':
            return table.to_csv()
        return table.to_text()

    # validate the region request before consulting the cache, so an
    # infinite request fails identically hot or cold
    _region_for(sys_, args)
    return _with_cache(args, sys_, compute), 0


def _run_push(args: argparse.Namespace) -> tuple[str, int]:
    sys_ = _system_for(args)
    alpha = sys_.parse_word(args.word)
    J = _parse_subset(sys_, args.parabolic)
    ideal = _region_for(sys_, args, required=False)
    res = pushforward_tilting(alpha, J, ideal, side=args.side)
    record = {'system': sys_.descriptor.to_json_obj(), **res.to_json_obj()}
    if args.format == 'json':
        return _dumps(record), 0
    if args.format == 'csv':
        lines = ['rep,weight']
        for rep in sorted(res.coeffs, key=lambda e: e.sort_key):
            lines.append(f'"{sys_.format_word(rep)}",{res.coeffs[rep]}')
        return '\n'.join(lines) + '\n', 0
    lines = [f'system {sys_.name}',
             f'push {sys_.format_word(alpha)} through '
             f'J={sorted(J)} ({args.side} cosets)']
    if res.is_zero:
        lines.append('result: zero (top is not minimal in its coset)')
    else:
        for rep in sorted(res.coeffs, key=lambda e: e.sort_key):
            lines.append(f'  {sys_.format_word(rep):<16} {res.coeffs[rep]}')
    return '\n'.join(lines) + '\n', 0


def _run_verify(args: argparse.Namespace) -> tuple[str, int]:
    sys_ = _system_for(args)
    ideal = _region_for(sys_, args)
    if args.parabolic == 'all':
        subsets = None
    else:
        subsets = [_parse_subset(sys_, args.parabolic)]
    report = cross_validate(ideal, subsets)
    status = 0 if report.ok else 1
    if args.format == 'json':
        return _dumps(report.to_json_obj()), status
    if args.format == 'csv':
        lines = ['check,passed,detail']
        for c in report.checks:
            detail = c.detail.replace('"', '""')
            lines.append(f'{c.name},{c.passed},"{detail}"')
        return '\n'.join(lines) + '\n', status
    return report.to_text(), status


def main(argv: 'list[str] | None' = None) -> int:
    args = _build_parser().parse_args(argv)
    runners = {'kl': _run_kl, 'tilting': _run_table, 'ic': _run_table,
               'invert': _run_table, 'push': _run_push,
               'verify': _run_verify}
    try:
        payload, status = runners[args.task](args)
    except (_UsageError, ValueError) as exc:
        print(json.dumps({'error': 'usage', 'message': str(exc)}),
              file=sys.stderr)
        return 2
    except (SelfDualityError, RuntimeError) as exc:
        print(json.dumps({'error': type(exc).__name__, 'message': str(exc)}),
              file=sys.stderr)
        return 2
    sys.stdout.write(payload)
    return status


if __name__ == '__main__':
    sys.exit(main())
