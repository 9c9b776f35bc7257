# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

import json
import os
import sqlite3
import time
from dataclasses import dataclass
from typing import Iterable, Optional

from .models import CellResult, Strategy


@dataclass
class StoragePaths:
    root_dir: str
    db_path: str


class CellStorage:
    """Per-cell result cache that lets an interrupted sweep resume.

    Each row carries the fingerprint of the plan and dataset it was computed
    under; a lookup only hits when seed and fingerprint both match.
    """

    def __init__(self, base_dir: str) -> None:
        self.base_dir = base_dir
        self.paths = self._init_paths()
        self._init_db()

    def _init_paths(self) -> StoragePaths:
        os.makedirs(self.base_dir, exist_ok=True)
        db_path = os.path.join(self.base_dir, "cells.sqlite")
        return StoragePaths(root_dir=self.base_dir, db_path=db_path)

    def _connect(self) -> sqlite3.Connection:
        conn = sqlite3.connect(self.paths.db_path)
        conn.row_factory = sqlite3.Row
        return conn

    def _init_db(self) -> None:
        with self._connect() as conn:
            conn.execute(
                """
                CREATE TABLE IF NOT EXISTS cells (
                    strategy TEXT NOT NULL,
                    size INTEGER NOT NULL,
                    repetition INTEGER NOT NULL,
                    seed TEXT NOT NULL,
                    payload TEXT NOT NULL,
                    error TEXT,
                    updated_at TEXT NOT NULL,
                    PRIMARY KEY (strategy, size, repetition)
                )
                """
            )
            self._ensure_column(conn, "fingerprint", "TEXT NOT NULL DEFAULT ''")
            conn.execute("CREATE INDEX IF NOT EXISTS idx_strategy_size ON cells(strategy, size)")

    def _ensure_column(self, conn: sqlite3.Connection, name: str, definition: str) -> None:
        columns = [row["name"] for row in conn.execute("PRAGMA table_info(cells)").fetchall()]
        if name not in columns:
            conn.execute(f"ALTER TABLE cells ADD COLUMN {name} {definition}")

    def upsert_cells(self, cells: Iterable[CellResult], fingerprint: str = "") -> int:
        now = str(int(time.time()))
        rows = [
            (
                cell.strategy.value,
                cell.size,
                cell.repetition,
                # seeds use the full unsigned 64-bit range, beyond sqlite INTEGER
                str(cell.seed),
                fingerprint,
                json.dumps(cell.to_dict(), sort_keys=True),
                cell.error,
                now,
            )
            for cell in cells
        ]
        if not rows:
            return 0
        with self._connect() as conn:
            conn.executemany(
                """
                INSERT INTO cells (strategy, size, repetition, seed, fingerprint, payload, error, updated_at)
                VALUES (?, ?, ?, ?, ?, ?, ?, ?)
                ON CONFLICT(strategy, size, repetition) DO UPDATE SET
                    seed=excluded.seed,
                    fingerprint=excluded.fingerprint,
                    payload=excluded.payload,
                    error=excluded.error,
                    updated_at=excluded.updated_at
                """,
                rows,
            )
        return len(rows)

    def get_cell(
        self,
        strategy: Strategy,
        size: int,
        repetition: int,
        seed: int,
        fingerprint: str = "",
    ) -> Optional[CellResult]:
        """Stored cell for the key, or ``None`` when missing or computed under another seed or plan."""
        with self._connect() as conn:
            row = conn.execute(
                """
                SELECT seed, fingerprint, payload FROM cells
                WHERE strategy = ? AND size = ? AND repetition = ?
                """,
                (Strategy.parse(strategy).value, size, repetition),
            ).fetchone()
        if row is None or row["seed"] != str(seed) or row["fingerprint"] != fingerprint:
            return None
        return CellResult.from_dict(json.loads(row["payload"]))
