"""Command line front end.

Four subcommands: ``gate-table`` characterizes the compiled gate
templates, ``grover`` runs search instances (optionally every oracle of
a given size, in parallel), ``tomography`` runs the fixed-basis probe
on the doubly-controlled NOT with and without an injected error, and
``costs`` tabulates predicted resources for wider controlled gates.

Every command writes ``results.json`` ({meta, rows}, schema in
``schemas/results.schema.json``) into --out; ``--format csv`` adds flat
CSV exports. Outputs are byte-identical for identical arguments and
seed: nothing is written until a command has fully succeeded.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from .decompositions import GATE_TEMPLATES, cz_template, toffoli_n_cost
from .gates import concat, xx_count
from .grover import (
    GroverConfig,
    OracleSpec,
    STYLES,
    classical_asp,
    enumerate_oracles,
    grover_circuit,
    theoretical_asp,
)
from .metrics import (
    asp,
    expected_grover_distribution,
    permutation_of,
    sso,
    truth_table,
    truth_table_fidelity,
)
from .noise import (
    NoiseConfig,
    NoiseModel,
    SpamModel,
    apply_spam,
    load_noise_config,
    noisy_truth_table,
    run_noisy,
)
from .statevector import all_labels, marginal
from .tomography import limited_tomography, tomography_success

_NO_NOISE = NoiseConfig(NoiseModel(), SpamModel())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iongrover",
        description="Grover search and gate synthesis in trapped-ion native gates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--noise", help="JSON noise/SPAM config file")
        p.add_argument("--seed", type=int, default=None, help="overrides the config seed")
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("gate-table", help="characterize compiled gate templates")
    p.add_argument("--gate", action="append", help="template name (repeatable); default all")
    common(p)

    p = sub.add_parser("grover", help="run search instances")
    p.add_argument("--style", choices=STYLES, required=True)
    p.add_argument("--marked", action="append", help="marked label (repeatable)")
    p.add_argument("--all", action="store_true", help="every marked set of size --t")
    p.add_argument("--t", type=int, default=1, help="marked-set size for --all")
    p.add_argument("--n", type=int, default=3, help="data qubits")
    p.add_argument("--iterations", type=int, default=1)
    p.add_argument("--spam", help="JSON SPAM config file (eps0/eps1/crosstalk)")
    p.add_argument("--shots", type=int, default=None, help="also sample counts")
    common(p)

    p = sub.add_parser("tomography", help="fixed-basis probe of the 3-qubit gate")
    p.add_argument("--trajectories", type=int, default=None,
                   help="overrides the config trajectory count")
    common(p)

    p = sub.add_parser("costs", help="predicted resources for wider controlled gates")
    p.add_argument("--min", type=int, default=3)
    p.add_argument("--max", type=int, default=8)
    common(p)

    return parser


def _load_configs(args) -> NoiseConfig:
    cfg = load_noise_config(args.noise) if args.noise else _NO_NOISE
    if getattr(args, "spam", None):
        spam_cfg = load_noise_config(args.spam)
        cfg = NoiseConfig(cfg.noise, spam_cfg.spam, cfg.trajectories, cfg.seed)
    if args.seed is not None:
        cfg = NoiseConfig(cfg.noise, cfg.spam, cfg.trajectories, args.seed)
    return cfg


def _write_outputs(out_dir: str, files: dict[str, str]):
    os.makedirs(out_dir, exist_ok=True)
    for name, text in files.items():
        with open(os.path.join(out_dir, name), "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _results_json(command: str, cfg: NoiseConfig, rows: list[dict]) -> str:
    doc = {
        "meta": {"command": command, "seed": cfg.seed, "version": __version__},
        "rows": rows,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _csv(header: list[str], rows: list[list]) -> str:
    out = io.StringIO()
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(
            ",".join(repr(float(c)) if isinstance(c, float) else str(c) for c in row)
            + "\n"
        )
    return out.getvalue()


def cmd_gate_table(args) -> dict[str, str]:
    cfg = _load_configs(args)
    names = args.gate or sorted(GATE_TEMPLATES)
    rows = []
    for name in names:
        if name not in GATE_TEMPLATES:
            raise ValueError(
                f"unknown gate {name!r}; known: {', '.join(sorted(GATE_TEMPLATES))}"
            )
        tmpl = GATE_TEMPLATES[name]
        circuit = tmpl.build(None)
        perm = permutation_of(tmpl.ideal)
        if cfg.noise.trivial:
            table = truth_table(circuit, tmpl.io_qubits)
        else:
            table = noisy_truth_table(
                circuit, tmpl.io_qubits, cfg.noise, cfg.trajectories, cfg.seed
            )
        rows.append(
            {
                "name": name,
                "n_qubits": circuit.n_qubits,
                "xx_count": xx_count(circuit),
                "rotation_count": len(circuit.gates) - xx_count(circuit),
                "truth_table_fidelity": truth_table_fidelity(table, perm),
            }
        )
    files = {"results.json": _results_json("gate-table", cfg, rows)}
    if args.format == "csv":
        header = ["name", "n_qubits", "xx_count", "rotation_count", "truth_table_fidelity"]
        files["results.csv"] = _csv(header, [[r[h] for h in header] for r in rows])
    return files


def _one_grover(job):
    spec, iterations, cfg, shots, job_seed = job
    circuit = grover_circuit(GroverConfig(spec, iterations))
    n = spec.n_qubits
    data = tuple(range(n))
    if cfg.noise.trivial:
        from .gates import run
        from .statevector import probabilities

        dist = marginal(probabilities(run(circuit)), circuit.n_qubits, data)
    else:
        dist = marginal(
            run_noisy(circuit, cfg.noise, cfg.trajectories, job_seed),
            circuit.n_qubits,
            data,
        )
    if not cfg.spam.trivial:
        dist = apply_spam(dist, cfg.spam)
    expected = expected_grover_distribution(n, spec.marked)
    row = {
        "marked": "+".join(spec.marked),
        "style": spec.style,
        "n_qubits": n,
        "xx_count": xx_count(circuit),
        "asp": asp(dist, spec.marked),
        "asp_ideal": theoretical_asp(2**n, len(spec.marked)),
        "asp_classical": classical_asp(2**n, len(spec.marked)),
        "sso": sso(expected, dist),
        "distribution": [float(p) for p in dist],
    }
    if shots is not None:
        counts = np.random.default_rng((job_seed, 1)).multinomial(shots, dist / dist.sum())
        row["counts"] = [int(c) for c in counts]
    return row


def cmd_grover(args) -> dict[str, str]:
    cfg = _load_configs(args)
    if bool(args.marked) == bool(args.all):
        raise ValueError("give either --marked labels or --all, not both")
    if args.shots is not None and args.shots < 1:
        raise ValueError(f"shots must be >= 1, got {args.shots}")
    if args.all:
        marked_sets = enumerate_oracles(args.n, args.t)
    else:
        marked_sets = [tuple(args.marked)]
    jobs = []
    for idx, marked in enumerate(marked_sets):
        spec = OracleSpec(args.n, marked, args.style)
        job_seed = cfg.seed * 100003 + idx
        jobs.append((spec, args.iterations, cfg, args.shots, job_seed))
    if len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=min(8, len(jobs))) as pool:
            rows = list(pool.map(_one_grover, jobs))
    else:
        rows = [_one_grover(jobs[0])]
    files = {"results.json": _results_json("grover", cfg, rows)}
    if args.format == "csv":
        header = ["marked", "style", "n_qubits", "xx_count", "asp", "asp_ideal",
                  "asp_classical", "sso"]
        files["results.csv"] = _csv(header, [[r[h] for h in header] for r in rows])
        labels = all_labels(args.n)
        long_rows = []
        for r in rows:
            for label, p in zip(labels, r["distribution"]):
                long_rows.append([r["marked"], r["style"], label, p])
        files["distributions.csv"] = _csv(
            ["marked", "style", "label", "probability"], long_rows
        )
    return files


def cmd_tomography(args) -> dict[str, str]:
    cfg = _load_configs(args)
    trajectories = args.trajectories or cfg.trajectories
    ideal = GATE_TEMPLATES["toffoli3"].build(None)
    variants = {
        "toffoli3": ideal,
        "toffoli3+cz": concat(ideal, cz_template(0, 1)),
    }
    rows = []
    for name, circuit in variants.items():
        table = limited_tomography(circuit, cfg.noise, trajectories, cfg.seed)
        rows.append(
            {
                "variant": name,
                "success": tomography_success(table),
                "table": [[float(p) for p in row] for row in table],
            }
        )
    files = {"results.json": _results_json("tomography", cfg, rows)}
    if args.format == "csv":
        files["results.csv"] = _csv(
            ["variant", "success"], [[r["variant"], r["success"]] for r in rows]
        )
        long_rows = []
        for r in rows:
            for i, row in enumerate(r["table"]):
                for j, p in enumerate(row):
                    long_rows.append(
                        [r["variant"], format(i, "03b"), format(j, "03b"), p]
                    )
        files["tomography.csv"] = _csv(
            ["variant", "input", "output", "probability"], long_rows
        )
    return files


def cmd_costs(args) -> dict[str, str]:
    cfg = _load_configs(args)
    if args.min < 3:
        raise ValueError(f"cost model starts at n = 3, got --min {args.min}")
    if args.max < args.min:
        raise ValueError(f"--max {args.max} below --min {args.min}")
    rows = []
    for n in range(args.min, args.max + 1):
        report = toffoli_n_cost(n)
        rows.append(
            {
                "n": n,
                "xx_count": report.xx_count,
                "ancilla_count": report.ancilla_count,
            }
        )
    files = {"results.json": _results_json("costs", cfg, rows)}
    if args.format == "csv":
        header = ["n", "xx_count", "ancilla_count"]
        files["results.csv"] = _csv(header, [[r[h] for h in header] for r in rows])
    return files


_COMMANDS = {
    "gate-table": cmd_gate_table,
    "grover": cmd_grover,
    "tomography": cmd_tomography,
    "costs": cmd_costs,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        files = _COMMANDS[args.command](args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _write_outputs(args.out, files)
    return 0


if __name__ == "__main__":
    sys.exit(main())
