"""Utility functions for file operations."""

import json
from pathlib import Path
from typing import Any, Optional, Type

from loguru import logger
from pydantic import BaseModel

from parcoh.errors import StructuralError


def write_json_file(
    data: Any,
    file_path: str | Path,
    create_dirs: bool = True,
    indent: int = 2,
    write_schema: bool = False,
    model: Optional[Type[BaseModel]] = None,
) -> Optional[Path]:
    """Write ``data`` as UTF-8 JSON with sorted keys.

    Args:
        data: JSON-serializable data.
        file_path: Path to the output file.
        create_dirs: Create missing parent directories.
        indent: Indentation of the output.
        write_schema: Also write ``<name>.schema.json`` next to the file.
        model: Pydantic model whose JSON schema is written.

    Returns:
        Path to the schema file if one was written, None otherwise.
    """
    file_path = Path(file_path)
    logger.debug(f"Writing JSON file to {file_path}")
    if create_dirs:
        file_path.parent.mkdir(parents=True, exist_ok=True)

    with open(file_path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=indent, sort_keys=True, ensure_ascii=False)
        f.write("\n")

    if not write_schema or model is None:
        return None
    schema_path = file_path.with_suffix(".schema.json")
    schema = model.model_json_schema()
    with open(schema_path, "w", encoding="utf-8") as f:
        json.dump(schema, f, indent=indent, sort_keys=True, ensure_ascii=False)
        f.write("\n")
    logger.debug(f"Wrote JSON schema to {schema_path}")
    return schema_path


def read_json_file(file_path: str | Path) -> Any:
    """Load a JSON file; unreadable or malformed files raise StructuralError."""
    file_path = Path(file_path)
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        raise StructuralError(f"file not found: {file_path}") from None
    except json.JSONDecodeError as error:
        raise StructuralError(
            f"{file_path} is not valid JSON (line {error.lineno}): {error.msg}"
        ) from None
    except UnicodeDecodeError as error:
        raise StructuralError(
            f"{file_path} is not UTF-8 (byte {error.start}): {error.reason}"
        ) from None
    except OSError as error:
        raise StructuralError(f"cannot read {file_path}: {error}") from None
