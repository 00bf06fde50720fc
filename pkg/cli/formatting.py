"""Human-readable text rendering of command responses (lossy)."""

import json

from pydantic import BaseModel

from cli.schemas import AnalyzeResponse, CheckResponse, ErrorResponse, FactorizeResponse, ScanResponse


def _set(values: list[int]) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


def _word(word: str) -> str:
    return word or "1"


def render_json(response: BaseModel) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(response.model_dump(mode="json"), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _header(response: BaseModel) -> list[str]:
    run = getattr(response, "run", None)
    if run is None:
        return [f"schema {response.schema_version}"]
    return [f"schema {response.schema_version} | {run.command} | seed={run.seed} budget={run.budget} n-bound={run.n_bound}"]


def _factorize(response: FactorizeResponse) -> list[str]:
    lines = [f"{response.count} {response.kind} factorizations of Z_{response.n}"]
    for pair in response.pairs:
        chain = f"  chain {'|'.join(str(k) for k in pair.chain)}" if pair.chain else ""
        lines.append(f"  ({_set(pair.left)}, {_set(pair.right)}){chain}")
    return lines


def _check(response: CheckResponse) -> list[str]:
    lines = [f"code over {response.code.alphabet}: {' '.join(response.code.words)}"]
    if response.is_code is not None:
        if response.is_code.is_code:
            lines.append("  code: yes")
        else:
            lines.append(f"  code: no, {response.is_code.witness} has two factorizations")
    if response.code_class is not None:
        kinds = [name for name in ("prefix", "suffix") if getattr(response.code_class, name)]
        lines.append(f"  class: {', '.join(kinds) if kinds else 'neither prefix nor suffix'}")
    if response.maximal is not None:
        lines.append(f"  maximal: {'yes' if response.maximal else 'no'} (measure {response.measure})")
    if "factorization" in response.checks:
        if response.factorization is None:
            lines.append("  factorization: none found")
        else:
            p = " + ".join(_word(w) for w in response.factorization.P)
            s = " + ".join(_word(w) for w in response.factorization.S)
            lines.append(f"  factorization: P = {p}, S = {s}")
    lines.append("PASS" if response.passed else f"FAIL: {', '.join(response.failures)}")
    return lines


def _analyze(response: AnalyzeResponse) -> list[str]:
    lines = [
        f"code over {response.code.alphabet}: {' '.join(response.code.words)}",
        f"letter {response.letter}, order n = {response.n}",
        f"left sets:  {' '.join(_set(p) for p in response.lefts)}",
        f"right sets: {' '.join(_set(q) for q in response.rights)}",
    ]
    if response.krasner_in_system:
        pairs = " ".join(f"({_set(k['I'])}, {_set(k['J'])})" for k in response.krasner_in_system)
        lines.append(f"Krasner pairs in the system: {pairs}")
    else:
        lines.append("no Krasner pair in the system")
    for sep in response.separators:
        xw = " ".join(f"({i},{j})" for i, j in sep.Xw)
        status = "ok" if sep.triangle else f"fails at K={sep.violating_k}"
        lines.append(f"  X_{sep.w} = {xw}  triangle {status}")
        if sep.injection_verified:
            lines.append("    good arrangement and dominated injection verified")
        if sep.note:
            lines.append(f"    {sep.note}")
    if response.corollary is not None:
        corollary = response.corollary
        verdict = "not applicable" if not corollary.applicable else ("ok" if corollary.ok else "triangle fails")
        lines.append(f"corollary {corollary.mode}: {verdict}")
    return lines


def _scan(response: ScanResponse) -> list[str]:
    corpus = response.corpus
    lines = [
        f"scan {response.mode} over {response.codes} codes "
        f"(requested {corpus.size}, max order {corpus.max_order}, seed {corpus.seed})"
    ]
    for name, count in sorted(response.counts.items()):
        lines.append(f"  {name}: {count}")
    if response.partial:
        lines.append("partial: some codes exceeded the budget")
    return lines


def _error(response: ErrorResponse) -> list[str]:
    lines = [f"error ({response.error}): {response.detail}"]
    if response.bundle:
        lines.append(json.dumps(response.bundle, sort_keys=True))
    return lines


def render_text(response: BaseModel) -> str:
    """Render any command response as text."""
    renderers = {
        FactorizeResponse: _factorize,
        CheckResponse: _check,
        AnalyzeResponse: _analyze,
        ScanResponse: _scan,
        ErrorResponse: _error,
    }
    body = renderers[type(response)](response)
    return "\n".join(_header(response) + body) + "\n"


def render(response: BaseModel, output_format: str) -> str:
    return render_text(response) if output_format == "text" else render_json(response)
