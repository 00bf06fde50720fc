"""Reading and writing code files: a text format with an alphabet header, and JSON."""

import json
from pathlib import Path
from typing import Union

from codes.models import FiniteCode
from common.exceptions import CodeParseError, FactorCodesError
from common.logging_config import get_logger

logger = get_logger(__name__)

HEADER = "alphabet:"


def parse_code_text(text: str) -> FiniteCode:
    """
    Parse the text format.

    Lines starting with ``#`` and blank lines are ignored. The first
    remaining line must be ``alphabet: <letters>``; every further line holds
    one word.

    Raises:
        CodeParseError: If the header is missing, a word repeats or uses a foreign letter
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or not lines[0].startswith(HEADER):
        raise CodeParseError(f"code text must start with an '{HEADER} <letters>' line")
    alphabet = lines[0][len(HEADER):].strip()
    if not alphabet or " " in alphabet:
        raise CodeParseError(f"invalid alphabet declaration {lines[0]!r}")

    words: list[str] = []
    for line in lines[1:]:
        if " " in line:
            raise CodeParseError(f"one word per line expected, got {line!r}")
        words.append(line)
    return _build(words, alphabet)


def parse_code_json(data: Union[str, dict]) -> FiniteCode:
    """
    Parse {"alphabet": "ab", "words": [...]}.

    Raises:
        CodeParseError: If the document does not have that shape
    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise CodeParseError(f"invalid JSON: {e}") from e
    if not isinstance(data, dict) or not isinstance(data.get("alphabet"), str) or not isinstance(data.get("words"), list):
        raise CodeParseError('expected an object {"alphabet": str, "words": [str, ...]}')
    if not all(isinstance(w, str) for w in data["words"]):
        raise CodeParseError("every word must be a string")
    return _build(data["words"], data["alphabet"])


def _build(words: list[str], alphabet: str) -> FiniteCode:
    if len(set(words)) != len(words):
        duplicates = sorted({w for w in words if words.count(w) > 1})
        raise CodeParseError(f"duplicate words {duplicates}")
    try:
        return FiniteCode(frozenset(words), alphabet)
    except FactorCodesError as e:
        raise CodeParseError(str(e)) from e


def read_code(path: Union[str, Path]) -> FiniteCode:
    """
    Read a code file; ``.json`` files use the JSON format, anything else the text format.

    Raises:
        CodeParseError: If the file cannot be read or parsed
    """
    file_path = Path(path)
    try:
        content = file_path.read_text(encoding="utf-8")
    except OSError as e:
        raise CodeParseError(f"cannot read {file_path}: {e}") from e
    code = parse_code_json(content) if file_path.suffix == ".json" else parse_code_text(content)
    logger.debug(f"Read {len(code)} words over {code.alphabet!r} from {file_path}")
    return code


def render_code_text(code: FiniteCode) -> str:
    lines = [f"{HEADER} {code.alphabet}", *code.sorted_words()]
    return "\n".join(lines) + "\n"


def write_code(code: FiniteCode, path: Union[str, Path]) -> None:
    file_path = Path(path)
    if file_path.suffix == ".json":
        file_path.write_text(json.dumps(code.to_json(), indent=2) + "\n", encoding="utf-8")
    else:
        file_path.write_text(render_code_text(code), encoding="utf-8")
