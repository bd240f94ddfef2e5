"""
Storage utilities for JSON reports and Parquet tables.

Usage:
    # Save a versioned JSON report
    ReportStorage.save_report({'transferCount': 4}, 'run.report.json')

    # Save per-character rows as Parquet
    rows = [{'character': 'a', 'first_appearances': 2}]
    ReportStorage.save_table(rows, 'run.parquet')

    # Load them back
    df = ReportStorage.load_table('run.parquet')
"""

import json
from typing import Any, Dict, List, Optional, Union

import pandas as pd
import pyarrow as pa
import pyarrow.parquet as pq

from oarc_log import log

from ptn_kit.utils.const import REPORT_SCHEMA
from ptn_kit.utils.errors import InputError
from ptn_kit.utils.paths import Paths, PathLike


class ReportStorage:
    """Utility class for saving and loading command reports."""

    @staticmethod
    def with_schema(report: Dict[str, Any]) -> Dict[str, Any]:
        """Copy of the report with the schema version as its first key."""
        return {"schema": REPORT_SCHEMA, **{k: v for k, v in report.items() if k != "schema"}}

    @staticmethod
    def report_text(report: Dict[str, Any]) -> str:
        return json.dumps(ReportStorage.with_schema(report), indent=2) + "\n"

    @staticmethod
    def save_report(report: Dict[str, Any], file_path: PathLike) -> bool:
        """Save a report as JSON.

        Args:
            report: JSON-serializable report
            file_path: Path of the JSON file

        Returns:
            bool: True if successful, False otherwise
        """
        log.debug(f"Saving report to {file_path}")
        success, error_message = Paths.ensure_parent_dir(file_path)
        if not success:
            log.error(f"Failed to create directory for {file_path}: {error_message}")
            return False
        try:
            with open(file_path, "w", encoding="utf-8", newline="") as f:
                f.write(ReportStorage.report_text(report))
            return True
        except (OSError, TypeError) as e:
            log.error(f"Failed to save report: {str(e)}")
            return False

    @staticmethod
    def load_report(file_path: PathLike) -> Dict[str, Any]:
        """Load a JSON report, checking its schema version.

        Args:
            file_path: Path of the report

        Returns:
            The report dictionary

        Raises:
            InputError: missing file, invalid JSON or unknown schema
        """
        if not Paths.file_exists(file_path):
            raise InputError(f"Report not found: {file_path}")
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                report = json.load(f)
        except json.JSONDecodeError as e:
            raise InputError(f"Invalid report JSON in {file_path}: {e.msg}")
        if report.get("schema") != REPORT_SCHEMA:
            raise InputError(f"Unsupported report schema {report.get('schema')!r}")
        return report

    @staticmethod
    def save_table(data: Union[Dict, List, pd.DataFrame], file_path: PathLike) -> bool:
        """Save rows to a Parquet file.

        Args:
            data: Data to save (dict, list of dicts, or DataFrame)
            file_path: Path to save the Parquet file

        Returns:
            bool: True if successful, False otherwise
        """
        log.debug(f"Saving table to Parquet file: {file_path}")

        success, error_message = Paths.ensure_parent_dir(file_path)
        if not success:
            log.error(f"Failed to create directory for {file_path}: {error_message}")
            return False

        if isinstance(data, dict):
            df = pd.DataFrame([data])
        elif isinstance(data, list):
            df = pd.DataFrame(data)
            log.debug(f"Converted list of {len(data)} rows to DataFrame")
        elif isinstance(data, pd.DataFrame):
            df = data
        else:
            log.error(f"Unsupported data type: {type(data)}")
            return False

        try:
            pq.write_table(pa.Table.from_pandas(df, preserve_index=False), str(file_path))
            log.debug(f"Successfully saved {len(df)} rows to {file_path}")
            return True
        except (OSError, pa.ArrowException) as e:
            log.error(f"Failed to save data to Parquet: {str(e)}")
            return False

    @staticmethod
    def load_table(file_path: PathLike) -> Optional[pd.DataFrame]:
        """Load a Parquet table, or None if the file does not exist."""
        log.debug(f"Loading data from Parquet file: {file_path}")

        if not Paths.file_exists(file_path):
            log.debug(f"Parquet file not found: {file_path}")
            return None

        try:
            return pq.read_table(str(file_path)).to_pandas()
        except (OSError, pa.ArrowException) as e:
            log.error(f"Failed to load Parquet file: {str(e)}")
            raise InputError(f"Failed to load Parquet file: {str(e)}")
