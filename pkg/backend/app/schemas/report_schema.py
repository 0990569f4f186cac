# JSON report schema
# The document layout lives in docs/schema.json (draft-07); this module loads
# it once and checks every run document before it is written.
import json
from functools import lru_cache
from pathlib import Path

import jsonschema

from ..errors import CorrCancelError

SCHEMA_PATH = Path(__file__).resolve().parents[3] / 'docs' / 'schema.json'


@lru_cache(maxsize=None)
def load_schema(path=SCHEMA_PATH):
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)


def validate_report(document, path=SCHEMA_PATH):
    """
    Check a run document against the report schema

    Returns:
        the document, unchanged

    Raises:
        CorrCancelError: the first violation, with its JSON path
    """
    try:
        jsonschema.validate(instance=document, schema=load_schema(path))
    except jsonschema.ValidationError as e:
        where = '$' + ''.join(f'[{part!r}]' for part in e.absolute_path)
        raise CorrCancelError(f"report does not match the schema at {where}: {e.message}",
                              schema_path=str(path)) from e
    return document
