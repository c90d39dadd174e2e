"""
Falsification de thermostat - Point d'entrée principal
Application en ligne de commande pour identifier les modèles, générer,
simuler et faire évoluer des scénarios d'utilisation du thermostat.

Commandes :
    - fit : identification des coefficients depuis une trace mesurée
    - generate : génération de cas de test par chaîne de Markov
    - simulate : exécution d'un cas de test et calcul de l'écart RMSE
    - evolve : algorithme génétique de bout en bout
    - random-search : recherche aléatoire de référence
    - compare : comparaison GA / recherche aléatoire sur plusieurs exécutions
    - print-default-config : affiche la configuration par défaut
"""
import argparse
import functools
import json
import sys
from dataclasses import replace
from pathlib import Path
from statistics import fmean

from src.config.config_manager import ConfigManager, load_json_document
from src.data_structures.model_registry import ModelRegistry
from src.factories.config_factory import ConfigFactory
from src.repositories.coefficient_repository import CSVCoefficientRepository
from src.repositories.manifest_repository import RunManifest
from src.repositories.results_repository import (
    config_hash, write_comparison, write_history, write_summary,
)
from src.repositories.scenario_repository import ScenarioRepository
from src.repositories.trace_repository import read_raw_trace, write_trace_comparison
from src.services.comparison import compare, matched_budget
from src.services.genetic_algorithm import config_snapshot, run_ga
from src.services.random_search import run_random_search
from src.services.scenario_generator import constraint_violations, generate_population
from src.services.simulator import expected_trace, fitness, simulate
from src.services.system_identification import (
    evaluate_model, fit_registry, segment_raw_trace,
)
from src.utils.logger import configure_logging


def print_separator():
    """Affiche un séparateur visuel."""
    print("\n" + "=" * 60 + "\n")


def reports_errors(command):
    """
    Convertit les erreurs attendues d'une commande en code de sortie 1.

    Args:
        command: Fonction de commande retournant 0 en cas de succès
    """
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (ValueError, KeyError, FileNotFoundError, OSError) as err:
            message = err.args[0] if isinstance(err, KeyError) and err.args else err
            print(f"Erreur: {message}", file=sys.stderr)
            return 1
    return wrapper


def _load_registry(registry_path):
    if registry_path is None:
        return ModelRegistry.default()
    return CSVCoefficientRepository().load(registry_path)


def _load_configs(config_path):
    document = load_json_document(config_path) if config_path else {}
    return ConfigFactory.from_document(document)


# ── Commandes ───────────────────────────────────────────


@reports_errors
def cmd_fit(trace_file, output_registry_path) -> int:
    """
    Identifie un modèle par paire de segments ON/OFF et écrit la table de coefficients.

    Args:
        trace_file: Trace brute (t_minutes;temperature_c;mode)
        output_registry_path: Table de coefficients à écrire

    Returns:
        0 si tous les ajustements ont convergé, 1 sinon
    """
    raw = read_raw_trace(trace_file)
    segments, dropped = segment_raw_trace(raw)
    if dropped:
        print(f"{dropped} échantillon(s) écarté(s) (segments de moins de 3 points)")

    registry, reports = fit_registry(segments)
    failed = [report for report in reports if not report.converged]

    print("\nModèles identifiés:")
    print("-" * 60)
    for report in reports:
        status = "ok" if report.converged else "NON CONVERGÉ"
        print(f"  • {report.coefficients}")
        print(f"    rmse ON={report.on_fit.rmse:.4f} °C, "
              f"rmse OFF={report.off_fit.rmse:.4f} °C ({status})")

    if failed:
        ids = ', '.join(str(r.coefficients.model_id) for r in failed)
        print(f"Erreur: ajustement non convergé pour le(s) modèle(s) {ids}", file=sys.stderr)
        return 1

    CSVCoefficientRepository().save(registry, output_registry_path)
    print(f"\n{len(registry)} modèle(s) écrit(s) dans {output_registry_path}")
    return 0


@reports_errors
def cmd_generate(gen_config_path, registry_path, n, seed, out_dir) -> int:
    """
    Génère n documents de cas de test (tc_0001.json, ...).

    Returns:
        0 en cas de succès
    """
    if n < 1:
        raise ValueError(f"n doit être ≥ 1 (reçu {n})")

    gen_cfg, _, _ = _load_configs(gen_config_path)
    registry = _load_registry(registry_path)
    seed = gen_cfg.rng_seed if seed is None else seed

    population = generate_population(n, gen_cfg, registry, seed)
    repository = ScenarioRepository()
    width = max(4, len(str(n)))
    out = Path(out_dir)
    for index, tc in enumerate(population, start=1):
        repository.save(tc, out / f"tc_{index:0{width}d}.json")

    print(f"{n} cas de test écrit(s) dans {out} (graine {seed})")
    return 0


@reports_errors
def cmd_simulate(test_case_path, registry_path, sim_config_path, out_trace_path) -> int:
    """
    Simule un cas de test, écrit la trace (minute, attendu, simulé) et affiche l'écart.

    Returns:
        0 en cas de succès
    """
    tc = ScenarioRepository().load(test_case_path)
    registry = _load_registry(registry_path)
    gen_cfg, _, sim_cfg = _load_configs(sim_config_path)

    unknown = [state.model_id for state in tc if state.model_id not in registry]
    if unknown:
        raise KeyError(f"Modèle {unknown[0]} inconnu (modèles disponibles: "
                       f"{', '.join(str(i) for i in registry.ids())})")

    expected = expected_trace(tc)
    simulated = simulate(tc, registry, sim_cfg)
    write_trace_comparison(out_trace_path, expected, simulated)

    deviation = fitness(tc, registry, sim_cfg)
    print(f"Fitness (RMSE): {deviation:.6f} °C")
    print(f"Fitness (convention négative): {-deviation:.6f}")
    for violation in constraint_violations(tc, gen_cfg, registry):
        print(f"Avertissement: contrainte K non respectée, {violation}")
    print(f"Trace écrite dans {out_trace_path} ({len(simulated)} minutes)")
    return 0


def _prepare_run(manifest_path, seed, out_dir):
    manifest = RunManifest.load(manifest_path)
    if seed is not None:
        manifest = replace(manifest, seed=seed)
    if out_dir is not None:
        manifest = replace(manifest, output_dir=Path(out_dir))
    gen_cfg, ga_cfg, sim_cfg = manifest.load_configs()
    return manifest, manifest.load_registry(), gen_cfg, ga_cfg, sim_cfg


@reports_errors
def cmd_evolve(manifest_path, seed=None, out_dir=None) -> int:
    """
    Exécute l'algorithme génétique et écrit le meilleur cas, l'historique et le résumé.

    Returns:
        0 en cas de succès
    """
    manifest, registry, gen_cfg, ga_cfg, sim_cfg = _prepare_run(manifest_path, seed, out_dir)
    result = run_ga(ga_cfg, gen_cfg, registry, sim_cfg)

    out = manifest.output_dir
    ScenarioRepository().save(result.best, out / 'best_test_case.json')
    write_history(out / 'convergence.csv', result.history)
    write_summary(out / 'summary.json', {
        'command': 'evolve',
        'seed': result.seed,
        'config_hash': config_hash(result.config_snapshot),
        'best_fitness': result.best_fitness,
        'best_fitness_negated': result.best_fitness_negated,
        'evaluations_used': result.evaluations_used,
        'generations_run': len(result.history),
    })

    print(f"Meilleure fitness: {result.best_fitness:.4f} °C "
          f"(convention négative {result.best_fitness_negated:.4f})")
    print(f"{result.evaluations_used} évaluations, {len(result.history)} générations")
    print(f"Résultats écrits dans {out}")
    return 0


@reports_errors
def cmd_random_search(manifest_path, budget=None, seed=None, out_dir=None) -> int:
    """
    Exécute la recherche aléatoire et écrit le meilleur cas, l'historique et le résumé.

    Returns:
        0 en cas de succès
    """
    manifest, registry, gen_cfg, ga_cfg, sim_cfg = _prepare_run(manifest_path, seed, out_dir)
    if budget is None:
        budget = matched_budget(ga_cfg)

    result = run_random_search(budget, gen_cfg, registry, sim_cfg, manifest.seed,
                               workers=ga_cfg.workers)
    mean_fitness = fmean(result.evaluated_fitnesses)

    out = manifest.output_dir
    ScenarioRepository().save(result.best, out / 'best_test_case.json')
    write_history(out / 'random_search_history.csv', result.history)
    write_summary(out / 'summary.json', {
        'command': 'random-search',
        'seed': result.seed,
        'config_hash': config_hash(result.config_snapshot),
        'best_fitness': result.best_fitness,
        'best_fitness_negated': result.best_fitness_negated,
        'mean_fitness': mean_fitness,
        'evaluations_used': result.evaluations_used,
    })

    print(f"Meilleure fitness: {result.best_fitness:.4f} °C, "
          f"fitness moyenne: {mean_fitness:.4f} °C sur {budget} cas")
    print(f"Résultats écrits dans {out}")
    return 0


@reports_errors
def cmd_compare(manifest_path, runs, seed=None, out_dir=None) -> int:
    """
    Compare GA et recherche aléatoire et écrit les trois séries du boxplot.

    Returns:
        0 en cas de succès
    """
    if runs < 2:
        raise ValueError(f"Au moins 2 exécutions sont nécessaires (reçu {runs})")

    manifest, registry, gen_cfg, ga_cfg, sim_cfg = _prepare_run(manifest_path, seed, out_dir)
    report = compare(runs, ga_cfg, gen_cfg, registry, sim_cfg, manifest.seed)

    out = manifest.output_dir
    write_comparison(out / 'comparison_runs.csv', out / 'random_individuals.csv', report)
    snapshot = config_snapshot(gen_cfg, sim_cfg, ga_cfg)
    write_summary(out / 'comparison_summary.json', {
        'command': 'compare',
        'base_seed': manifest.seed,
        'runs': runs,
        'seeds': list(report.seeds),
        'config_hash': config_hash(snapshot),
        'series': {
            name: {
                'min': s.minimum, 'q1': s.q1, 'median': s.median, 'q3': s.q3,
                'max': s.maximum, 'mean': s.mean, 'count': s.count,
                'mean_negated': -s.mean,
            }
            for name, s in report.summaries.items()
        },
        'mann_whitney_u_indicative': {
            'u_statistic': report.u_statistic,
            'p_value': report.p_value,
        },
    })

    print_separator()
    print(f"Comparaison sur {runs} exécutions")
    print("-" * 60)
    for name, s in report.summaries.items():
        print(f"  {name:<7} médiane={s.median:.4f} moyenne={s.mean:.4f} "
              f"[{s.minimum:.4f}, {s.maximum:.4f}]")
    print(f"  Mann-Whitney U={report.u_statistic:.1f}, p={report.p_value:.4g} (indicatif)")
    print(f"\nRésultats écrits dans {out}")
    return 0


@reports_errors
def cmd_print_default_config(out_path=None) -> int:
    """Affiche (ou écrit) le document de configuration par défaut complet."""
    text = json.dumps(ConfigFactory.default_document(), indent=2) + "\n"
    if out_path is None:
        print(text, end="")
    else:
        path = Path(out_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding='utf-8')
        print(f"Configuration par défaut écrite dans {path}")
    return 0


# ── Analyse des arguments ───────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    """Construit l'analyseur de la ligne de commande."""
    parser = argparse.ArgumentParser(
        prog='main.py',
        description="Falsification d'un thermostat hybride par recherche évolutionnaire",
    )
    parser.add_argument('-v', '--verbose', action='store_true',
                        help="journalisation détaillée (DEBUG)")
    commands = parser.add_subparsers(dest='command', required=True)

    fit = commands.add_parser('fit', help="identifier les modèles depuis une trace")
    fit.add_argument('trace_file')
    fit.add_argument('--out', required=True, help="table de coefficients à écrire")

    generate = commands.add_parser('generate', help="générer des cas de test")
    generate.add_argument('-n', type=int, required=True)
    generate.add_argument('--config')
    generate.add_argument('--registry')
    generate.add_argument('--seed', type=int)
    generate.add_argument('--out', required=True, help="dossier de sortie")

    sim = commands.add_parser('simulate', help="simuler un cas de test")
    sim.add_argument('test_case')
    sim.add_argument('--registry')
    sim.add_argument('--config')
    sim.add_argument('--out', required=True, help="trace à écrire")

    for name, text in (('evolve', "algorithme génétique"),
                       ('random-search', "recherche aléatoire"),
                       ('compare', "comparaison GA / recherche aléatoire")):
        sub = commands.add_parser(name, help=text)
        sub.add_argument('manifest')
        sub.add_argument('--seed', type=int)
        sub.add_argument('--out', help="dossier de sortie (remplace celui du manifeste)")
        if name == 'random-search':
            sub.add_argument('--budget', type=int)
        if name == 'compare':
            sub.add_argument('--runs', type=int, default=50)

    defaults = commands.add_parser('print-default-config',
                                   help="afficher la configuration par défaut")
    defaults.add_argument('--out')
    return parser


def main(argv=None) -> int:
    """Fonction principale de l'application."""
    args = build_parser().parse_args(argv)
    configure_logging('DEBUG' if args.verbose else ConfigManager().get_logging_level())

    if args.command == 'fit':
        return cmd_fit(args.trace_file, args.out)
    if args.command == 'generate':
        return cmd_generate(args.config, args.registry, args.n, args.seed, args.out)
    if args.command == 'simulate':
        return cmd_simulate(args.test_case, args.registry, args.config, args.out)
    if args.command == 'evolve':
        return cmd_evolve(args.manifest, args.seed, args.out)
    if args.command == 'random-search':
        return cmd_random_search(args.manifest, args.budget, args.seed, args.out)
    if args.command == 'compare':
        return cmd_compare(args.manifest, args.runs, args.seed, args.out)
    return cmd_print_default_config(args.out)


if __name__ == "__main__":
    sys.exit(main())
