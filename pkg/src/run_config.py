"""
Resolved run configuration.

A RunConfig is built from config.json defaults, then the chosen preset, then
explicit CLI flags (later wins). The resolved copy is written into every
output directory so any artifact can be regenerated from it plus the dataset.
"""

import json
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

from .constants import DEFAULT_MEM_CAP, SEED_ENV_VAR, FileNames, JIndex, Presets, RecipeTokens
from .utils.file_operations import dataset_name, resolve_dataset_path, write_json


@dataclass(frozen=True)
class RunConfig:
    command: str
    dataset: str
    dataset_path: str
    output_dir: str
    preset: str | None = None
    T: int = 10
    b: float = 10.0
    dim: int = 128
    folds: int = 5
    seed: int = 0
    recipes: tuple[str, ...] = tuple(RecipeTokens.MENU)
    mem_cap: int = DEFAULT_MEM_CAP
    j_index: str = JIndex.CANONICAL
    threads: int = 1
    oversample: int = 10
    power_iters: int = 7
    walk_length: int = 40
    walks_per_node: tuple[int, ...] = (100, 1000, 10000)
    degree_weighted: bool = True
    balance_offsets: bool = True
    ground_truth: str = 'closed-form'
    export_corpus: bool = False

    def to_dict(self) -> dict:
        data = asdict(self)
        data['recipes'] = list(self.recipes)
        data['walks_per_node'] = list(self.walks_per_node)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> 'RunConfig':
        known = {f.name for f in fields(cls)}
        kwargs = {k: v for k, v in data.items() if k in known}
        if 'recipes' in kwargs:
            kwargs['recipes'] = tuple(kwargs['recipes'])
        if 'walks_per_node' in kwargs:
            kwargs['walks_per_node'] = tuple(int(x) for x in kwargs['walks_per_node'])
        return cls(**kwargs)

    @classmethod
    def from_json(cls, path: Path) -> 'RunConfig':
        with open(path, encoding='utf-8') as f:
            return cls.from_dict(json.load(f))

    def write(self, output_dir: Path) -> Path:
        """Serialize into output_dir/run_config.json"""
        return write_json(self.to_dict(), Path(output_dir) / FileNames.RUN_CONFIG)

    def with_overrides(self, **changes) -> 'RunConfig':
        return replace(self, **changes)

    @classmethod
    def resolve(cls, command: str, args: dict, config: dict, paths: dict, env: dict | None = None) -> 'RunConfig':
        """
        Resolve defaults -> preset -> explicit flags into one explicit parameter set.

        Args:
            command: Subcommand name
            args: Parsed CLI flags (None means "not given")
            config: Loaded config.json
            paths: Paths dict (data_folder, output_folder)
            env: Environment mapping used for the seed fallback (defaults to os.environ)

        Returns:
            Fully explicit RunConfig

        Raises:
            ValueError: unknown preset
        """
        env = os.environ if env is None else env
        defaults = config.get('defaults', {})
        svd = config.get('svd', {})
        oracle = config.get('oracle', {})

        values = {
            'T': defaults.get('T', 10),
            'b': defaults.get('b', 10.0),
            'dim': defaults.get('dim', 128),
            'folds': defaults.get('folds', 5),
            'recipes': tuple(defaults.get('recipes', RecipeTokens.MENU)),
            'mem_cap': defaults.get('mem_cap', DEFAULT_MEM_CAP),
            'j_index': defaults.get('j_index', JIndex.CANONICAL),
            'threads': defaults.get('threads', 1),
            'oversample': svd.get('oversample', 10),
            'power_iters': svd.get('power_iters', 7),
            'walk_length': oracle.get('walk_length', 40),
            'walks_per_node': tuple(oracle.get('walks_per_node_grid', [100, 1000, 10000])),
            'degree_weighted': oracle.get('degree_weighted', True),
            'balance_offsets': oracle.get('balance_offsets', True),
        }

        preset = args.get('preset')
        if preset:
            presets = {**Presets.DEFAULTS, **config.get('presets', {})}
            if preset not in presets:
                raise ValueError(f'Unknown preset: {preset} (available: {", ".join(sorted(presets))})')
            values.update(presets[preset])

        flag_map = {
            'T': 'T',
            'b': 'b',
            'dim': 'dim',
            'folds': 'folds',
            'mem_cap': 'mem_cap',
            'j_index': 'j_index',
            'threads': 'threads',
            'walk_length': 'walk_length',
            'ground_truth': 'ground_truth',
        }
        for flag, key in flag_map.items():
            if args.get(flag) is not None:
                values[key] = args[flag]
        if args.get('recipe'):
            values['recipes'] = tuple(args['recipe'])
        elif command == 'reconstruct':
            values['recipes'] = (RecipeTokens.TRUNC_LOG_Q,)
        if args.get('walks_per_node'):
            values['walks_per_node'] = tuple(args['walks_per_node'])
        if args.get('export_corpus'):
            values['export_corpus'] = True

        seed = args.get('seed')
        if seed is None and env.get(SEED_ENV_VAR):
            seed = int(env[SEED_ENV_VAR])
        if seed is None:
            seed = defaults.get('seed', 0)
        values['seed'] = int(seed)

        graph = args.get('graph') or 'karate'
        dataset_path = resolve_dataset_path(graph, Path(paths['data_folder']))
        dataset = dataset_name(dataset_path)

        output_dir = args.get('out')
        if not output_dir:
            output_dir = str(Path(paths['output_folder']) / command / dataset)

        values['T'] = int(values['T'])
        values['b'] = float(values['b'])
        values['dim'] = int(values['dim'])
        values['folds'] = int(values['folds'])
        values['mem_cap'] = int(values['mem_cap'])
        values['threads'] = int(values['threads'])

        return cls(
            command=command,
            dataset=dataset,
            dataset_path=str(dataset_path),
            output_dir=str(output_dir),
            preset=preset,
            **values,
        )
