"""Write command results to the data stream in each `--emit` format."""

import csv
import json

from ..util import format_number


def _cell(value):
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, float):
        return format_number(value)
    if value is None:
        return ''
    return value


def _numbers(obj):
    """Round floats to 12 significant digits throughout a JSON document."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, float):
        return float(format_number(obj))
    if isinstance(obj, dict):
        return {key: _numbers(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_numbers(value) for value in obj]
    return obj


def emit_text(stream, lines):
    for line in lines:
        stream.write("{}\n".format(line))


def emit_graph6(stream, codes):
    for code in codes:
        stream.write("{}\n".format(code))


def emit_csv(stream, columns, rows):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(value) for value in row])


def emit_json(stream, document):
    json.dump(_numbers(document), stream, indent=2, sort_keys=True)
    stream.write("\n")
