"""
Writes reports as aligned text tables, JSON arrays or CSV rows.
"""
import csv
import json
import logging
import sys
from typing import IO, Any, Dict, List, Optional, Sequence

from hyperoct.config import OUTPUT_FORMATS
from hyperoct.errors import UsageError
from hyperoct.polynomial import IntPolynomial

logger = logging.getLogger('hyperoct')

# Keys whose list values are coefficient arrays
POLYNOMIAL_KEYS = ("lhs", "rhs", "polynomial")
# Keys whose list values are index sets
SUBSET_KEYS = ("I", "descents")


def _text_value(key: str, value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, list):
        if key in POLYNOMIAL_KEYS:
            return IntPolynomial.from_list(value).render()
        if key in SUBSET_KEYS:
            return "{" + ",".join(str(v) for v in value) + "}"
        return "; ".join(str(v) for v in value) if value else "-"
    return str(value)


def _csv_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, list):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


class ReportWriter:
    """Formats a batch of reports for standard out."""

    def __init__(self, output_format: str = "text", stream: Optional[IO[str]] = None):
        """
        Initialize the writer.

        Args:
            output_format (str): One of text, json, csv
            stream (file or None): Destination, standard out by default
        """
        if output_format not in OUTPUT_FORMATS:
            raise UsageError(f"unknown output format {output_format!r}")
        self.output_format = output_format
        self.stream = stream if stream is not None else sys.stdout

    def write(self, reports: Sequence[Any]):
        """Write reports that provide to_dict(); text output adds elapsed seconds when known."""
        records = [r.to_dict() for r in reports]
        if self.output_format == "json":
            self._write_json(records)
        elif self.output_format == "csv":
            self._write_csv(records)
        else:
            elapsed = [getattr(r, "elapsed", None) for r in reports]
            self._write_text(records, elapsed)
        logger.debug(f"Wrote {len(records)} {self.output_format} record(s)")

    def _write_json(self, records: List[Dict[str, Any]]):
        json.dump(records, self.stream, indent=2)
        self.stream.write("\n")

    def _write_csv(self, records: List[Dict[str, Any]]):
        if not records:
            return
        columns = list(records[0].keys())
        writer = csv.writer(self.stream, lineterminator="\n")
        writer.writerow(columns)
        for record in records:
            writer.writerow([_csv_value(record.get(c)) for c in columns])

    def _write_text(self, records: List[Dict[str, Any]], elapsed: List[Optional[float]]):
        if not records:
            self.stream.write("(no results)\n")
            return
        columns = list(records[0].keys())
        rows = [[_text_value(c, record.get(c)) for c in columns] for record in records]
        if all(e is not None for e in elapsed):
            columns.append("seconds")
            for row, seconds in zip(rows, elapsed):
                row.append(f"{seconds:.3f}")
        widths = [max(len(c), *(len(row[k]) for row in rows)) for k, c in enumerate(columns)]
        self.stream.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
        for row in rows:
            self.stream.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")
