"""Replayable nonexistence certificates.

Every registered row is a machine-checked derivation: symbolic residuals are
rebuilt from the structure equations and compared step by step against the
recorded expressions.  The full replay (all rows, all sign/sample choices)
is part of the acceptance suite; here we exercise the registry API, a few
targeted rows, and the tamper-detection path.
"""
import dataclasses

import pytest

from hermlie.obstructions import (
    ObstructionRow,
    Step,
    obstruction_table,
    replay_all,
    replay_obstruction_row,
)


class TestRegistryAPI:
    def test_table_is_populated(self):
        rows = obstruction_table()
        assert len(rows) == 46
        assert all(isinstance(r, ObstructionRow) for r in rows)

    def test_algebra_filter_splits_shared_rows(self):
        # merged rows list several algebras separated by '|'
        rows = obstruction_table(algebra="s6.140^-1")
        assert rows
        assert all("s6.140^-1" in r.algebra.split("|") for r in rows)

    def test_skt_aliases_to_twisted_rows(self):
        skt = obstruction_table(condition="skt")
        lcskt = obstruction_table(condition="lcskt")
        assert skt and skt == lcskt

    def test_conclusions_vocabulary(self):
        allowed = {"residual_nonzero", "mu_forced_zero", "no_solution"}
        assert {r.conclusion for r in obstruction_table()} <= allowed

    def test_conditions_vocabulary(self):
        allowed = {"complex", "first_gauduchon", "lck", "lcskt",
                   "strongly_gauduchon", "tamed"}
        assert {r.condition for r in obstruction_table()} <= allowed


class TestReplay:
    def row(self, algebra, condition):
        rows = obstruction_table(algebra=algebra, condition=condition)
        assert rows, f"no row for {algebra}/{condition}"
        return rows[0]

    def test_replay_reports(self):
        report = replay_obstruction_row(self.row("s6.162^1", "lcskt"))
        assert report["ok"] and report["runs"] >= 1
        assert report["conclusion"] == "residual_nonzero"

    def test_replay_runs_every_sign_and_sample(self):
        row = self.row("h3+s3.3^0", "strongly_gauduchon")
        report = replay_obstruction_row(row)
        expected_runs = max(1, 2 ** len(row.signs)) * max(1, len(row.samples))
        assert report["runs"] == expected_runs

    def test_replay_all_filtered(self):
        reports = replay_all(algebra="s6.145^0")
        assert reports and all(r["ok"] for r in reports)

    def test_tampered_row_is_rejected(self):
        row = self.row("s6.162^1", "lcskt")
        orig = row.steps[0]
        bad_step = Step(label=orig.label, value=orig.value,
                        expected=lambda ctx: ctx.ring.constant(12345))
        tampered = dataclasses.replace(row, steps=(bad_step,))
        with pytest.raises(AssertionError):
            replay_obstruction_row(tampered)

    def test_nijenhuis_rows_cover_all_controls(self):
        covered = set()
        for r in obstruction_table(condition="complex"):
            covered |= set(r.algebra.split("|"))
        assert covered == {"s6.140^-1", "s6.146^-1", "s6.151", "s6.155^1"}
