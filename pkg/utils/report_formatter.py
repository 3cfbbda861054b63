import json
from typing import Dict, List

import pandas as pd


def to_json(document: Dict) -> str:
    """
    Serializes a document as UTF-8 friendly, byte-deterministic JSON.

    Args:
        document (dict): The document

    Returns:
        str: Indented JSON with a trailing newline
    """
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _cell(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False, separators=(",", ":"))
    if value is None:
        return "-"
    return str(value)


def rows_to_frame(rows: List[Dict]) -> pd.DataFrame:
    """Flattens a list of records into a DataFrame; nested values become compact JSON."""
    frame = pd.DataFrame(rows)
    for column in frame.columns:
        frame[column] = frame[column].map(_cell)
    return frame


def to_text(document: Dict) -> str:
    """
    Renders a document as plain text: scalar fields as "key: value" lines,
    lists of records as tables. Carries the same data as to_json.

    Args:
        document (dict): The document

    Returns:
        str: The rendered text
    """
    lines = []
    tables = []
    for key, value in document.items():
        if isinstance(value, list) and value and all(isinstance(item, dict) for item in value):
            tables.append((key, value))
        else:
            lines.append(f"{key}: {_cell(value)}")

    for name, records in tables:
        lines.append("")
        lines.append(f"{name} ({len(records)})")
        lines.append(rows_to_frame(records).to_string(index=False))

    return "\n".join(lines) + "\n"
