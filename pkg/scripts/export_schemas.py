#!/usr/bin/env python3
"""Gera os JSON Schemas de schemas/ a partir dos modelos pydantic.

Um arquivo por saída de subcomando e um por documento de entrada.
Uso, na raiz do repositório: PYTHONPATH=. python scripts/export_schemas.py
"""

import json
from pathlib import Path

from src.models.schemas import build_schemas

ROOT = Path(__file__).resolve().parent.parent
SCHEMAS = ROOT / "schemas"


def main() -> None:
    SCHEMAS.mkdir(exist_ok=True)
    for file_name, schema in build_schemas().items():
        path = SCHEMAS / file_name
        path.write_text(json.dumps(schema, indent=2, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")
        print(f"Escrito: {path.relative_to(ROOT)}")


if __name__ == "__main__":
    main()
