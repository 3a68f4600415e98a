import sys
import json
import logging
import argparse
from typing import List

import stokes
from stokes import settings
from stokes.errors import StokesError
from stokes.logger import Logger


class UsageError(Exception):
    pass


def dump(document: dict) -> str:
    return json.dumps(document, sort_keys=True, indent=2)


def read_graph(file: str) -> stokes.bipartite.BipartiteGraph:
    try:
        with open(file, 'r') as f:
            data = json.load(f)
    except IOError:
        raise UsageError('\'{}\' does not exist'.format(file))
    except json.JSONDecodeError as e:
        raise UsageError('\'{}\' is not a JSON document: {}'.format(file, e))
    return stokes.bipartite.BipartiteGraph.from_dict(data.get('graph', data))


def read_location(text: str):
    parts = [p.strip() for p in text.split(',')]
    if len(parts) == 1:
        return parts[0]
    if len(parts) == 2:
        return tuple(parts)
    raise UsageError('A location is a vertex or two comma separated corners, got \'{}\''.format(text))


def at_least(minimum: int):
    def check(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError('\'{}\' is not an integer'.format(text))
        if value < minimum:
            raise argparse.ArgumentTypeError('must be at least {}, got {}'.format(minimum, value))
        return value
    return check


def graph_output(graph: stokes.bipartite.BipartiteGraph, fmt: str, document: dict) -> str:
    if fmt == 'dot':
        return graph.create_graphviz_object().source
    if fmt == 'svg':
        return graph.create_graphviz_object().pipe(format='svg').decode('utf-8')
    return dump(document)


def analyze(args) -> str:
    if args.format != 'json':
        raise UsageError('analyze only writes json, use render for pictures')
    source = args.preset if args.preset is not None else args.polynomial
    if source is None:
        raise UsageError('analyze needs a polynomial or --preset')
    return stokes.run_pipeline(source, args.seed, args.resolution, args.swap,
                               preset=args.preset is not None).to_json()


def dynkin(args) -> str:
    dynkin_type = stokes.poly.parse_dynkin_type(args.type)
    graph = stokes.bipartite.dynkin_to_bipartite(dynkin_type)
    document = {
        'type': str(dynkin_type),
        'white': len(graph.white),
        'black': len(graph.black),
        'faces': len(graph.faces),
        'graph': graph.to_dict(),
        'dimension': stokes.bipartite.configuration_dimension(graph, args.trials, args.seed),
        'minimal': stokes.bipartite.is_minimal(graph, args.trials, args.seed),
        'trials': args.trials,
        'seed': args.seed
    }
    return graph_output(graph, args.format, document)


def config(args) -> str:
    if args.format != 'json':
        raise UsageError('config only writes json')
    graph = stokes.bipartite.dynkin_to_bipartite(stokes.poly.parse_dynkin_type(args.type))
    conn = stokes.bipartite.random_connection(graph, args.seed)
    configuration = stokes.bipartite.configuration_from_connection(conn)
    document = {
        'connection': conn.to_dict(),
        'configuration': configuration.to_dict(),
        'collinear': configuration.collinear_groups(),
        'monodromies': [[list(face), stokes.flags.rational_string(value)]
                        for face, value in stokes.bipartite.face_monodromies(conn).items()],
        'seed': args.seed
    }
    return dump(document)


def braid_eq(args) -> str:
    if args.format != 'json':
        raise UsageError('braid-eq only writes json')
    w1 = stokes.words.parse_word(args.first)
    w2 = stokes.words.parse_word(args.second)
    result = stokes.words.braid_equivalent(w1, w2, args.node_limit)
    document = result.to_dict()
    document['words'] = [str(w1), str(w2)]
    return dump(document)


def move(args) -> str:
    graph = read_graph(args.graph)
    result = stokes.bipartite.apply_move(graph, args.move, read_location(args.at))
    document = {'move': args.move, 'graph': result.to_dict()}
    return graph_output(result, args.format, document)


def render(args) -> str:
    if args.kind == 'graph':
        graph = stokes.bipartite.dynkin_to_bipartite(stokes.poly.parse_dynkin_type(args.source))
        return graph_output(graph, 'svg' if args.format == 'svg' else 'dot', {})

    if args.format != 'svg':
        raise UsageError('{} pictures are only written as svg'.format(args.kind))
    analyzer = stokes.Analyzer(args.source, args.seed, args.resolution, args.swap)
    poly = analyzer.polynomial()
    if args.kind == 'polygon':
        return stokes.growth.render_polygon_svg(stokes.lattice.newton_polygon(poly))
    diagram, _ = stokes.growth.sweep_with_retry(poly, args.seed, args.resolution)
    return stokes.growth.render_growth_svg(diagram, args.alpha)


COMMANDS = {
    'analyze' : analyze,
    'dynkin'  : dynkin,
    'config'  : config,
    'braid-eq': braid_eq,
    'move'    : move,
    'render'  : render
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='This is the CLI tool for the stokes '
                                                 'library. It computes Newton polygon '
                                                 'invariants, growth diagrams and Stokes '
                                                 'words of plane curve singularities and '
                                                 'builds and realizes the bipartite graphs '
                                                 'of Dynkin diagrams.')

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=at_least(0), default=settings.DEFAULT_SEED,
                        help='Seed of every generic choice. Equal seeds give equal output.')
    common.add_argument('--resolution', type=at_least(4), default=settings.DEFAULT_RESOLUTION,
                        help='Number of grid steps of the rotation sweep.')
    common.add_argument('--swap', action='store_true',
                        help='Exchange x and p before the analysis.')
    common.add_argument('--trials', type=at_least(1), default=settings.DEFAULT_TRIALS,
                        help='Number of generic connections the configuration '
                             'dimension is computed from.')
    common.add_argument('--format', type=str, choices=['json', 'dot', 'svg'], default='json',
                        help='Output format.')
    common.add_argument('--log-level', type=str, default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='Level of the messages written to the log file.')

    commands = parser.add_subparsers(dest='command')
    commands.required = True

    p = commands.add_parser('analyze', parents=[common],
                            help='Run the polynomial to Stokes word pipeline.')
    p.add_argument('polynomial', type=str, nargs='?',
                   help='A polynomial in x and p such as \'x^5 + p^3 + a1*x\'.')
    p.add_argument('--preset', type=str,
                   help='A Dynkin type such as A4, D4 or E8 whose versal family is analyzed.')

    p = commands.add_parser('dynkin', parents=[common],
                            help='Build the bipartite graph of a Dynkin diagram.')
    p.add_argument('type', type=str, help='A Dynkin type such as D4.')

    p = commands.add_parser('config', parents=[common],
                            help='Realize the point configuration of a Dynkin graph.')
    p.add_argument('type', type=str, help='A Dynkin type such as D4.')

    p = commands.add_parser('braid-eq', parents=[common],
                            help='Decide whether two cyclic words are braid equivalent.')
    p.add_argument('first', type=str, help='A word such as \'(s2 s1^2)^4\'.')
    p.add_argument('second', type=str, help='A word such as \'(s2 s1^3)^3\'.')
    p.add_argument('--node-limit', type=at_least(1), default=settings.DEFAULT_NODE_LIMIT,
                   help='Largest number of words explored before giving up.')

    p = commands.add_parser('move', parents=[common],
                            help='Apply a local move to a bipartite graph.')
    p.add_argument('graph', type=str, help='Path to a graph JSON document.')
    p.add_argument('move', type=str, choices=sorted(stokes.bipartite.MOVES.keys()),
                   help='The move to apply.')
    p.add_argument('--at', type=str, required=True,
                   help='The 2-valent vertex for moves 1 and 1\', two comma '
                        'separated square corners for moves 2 and 2\'.')

    p = commands.add_parser('render', parents=[common],
                            help='Draw a Newton polygon, growth diagram or Dynkin graph.')
    p.add_argument('source', type=str, help='A polynomial, or a Dynkin type.')
    p.add_argument('--kind', type=str, choices=['polygon', 'growth', 'graph'], default='polygon',
                   help='What to draw.')
    p.add_argument('--alpha', type=float, default=0.0,
                   help='Sweep parameter, in turns, at which growth points are drawn.')

    return parser


def main(args) -> int:
    Logger().set_level(getattr(logging, args.log_level))
    try:
        print(COMMANDS[args.command](args))
    except UsageError as e:
        print('error: {}'.format(e), file=sys.stderr)
        return 2
    except StokesError as e:
        print('error: {}'.format(e), file=sys.stderr)
        return 1
    return 0


def run(argv: List[str] = None) -> int:
    return main(build_parser().parse_args(argv))


if __name__ == '__main__':
    sys.exit(run())
