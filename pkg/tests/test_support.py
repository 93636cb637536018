import json
import os
import unittest
from unittest import mock

from torus_homfly.cli import banner
from torus_homfly.combinatorics import PartitionTuple
from torus_homfly.memory_watchdog import resident_memory_mb, start_memory_watchdog
from torus_homfly.paths import character_cache_file, path_or_default, persistence_requested
from torus_homfly.polyring import Bracket, ExactLaurent, RationalFunction
from torus_homfly.records import ColoredInvariantRecord, link_record, rational_from_record, rational_record
from torus_homfly.torus import TorusLinkSpec, colored_homfly_torus
from torus_homfly.types import OutputMode, Variable


class RecordTester(unittest.TestCase):
    def test_rational_record_round_trip(self):
        value = colored_homfly_torus(TorusLinkSpec(2, 3), PartitionTuple.from_string("2")).value
        record = rational_record(value)
        self.assertEqual(value, rational_from_record(record))
        self.assertEqual(str(value), record.text)

    def test_schema_alias(self):
        value = colored_homfly_torus(TorusLinkSpec(1, 1), PartitionTuple.from_string("1")).value
        record = ColoredInvariantRecord(link=link_record(1, 1, 1), colors="1", value=rational_record(value))
        data = json.loads(record.model_dump_json(by_alias=True))
        self.assertEqual(1, data["schema"])
        self.assertEqual([["t", 1]], data["value"]["den"])

    def test_denominator_pairs_repeat_powers(self):
        value = RationalFunction(ExactLaurent.one(), {Bracket(Variable.T, 1): 2, Bracket(Variable.NU, 3): 1})
        record = rational_record(value)
        self.assertEqual([("t", 1), ("t", 1), ("v", 3)], record.den)
        self.assertEqual(value, rational_from_record(record))

    def test_exponents_written_exactly(self):
        record = rational_record(colored_homfly_torus(TorusLinkSpec(1, 1), PartitionTuple.from_string("1")).value)
        self.assertEqual({"1/2", "-1/2"}, {term.ev for term in record.num})


class EnumTester(unittest.TestCase):
    def test_variable_names(self):
        self.assertIs(Variable.NU, Variable.from_string("nu"))
        self.assertIs(Variable.T, Variable.from_string(" T "))
        with self.assertRaises(ValueError):
            Variable.from_string("q")

    def test_output_mode(self):
        self.assertIs(OutputMode.JSON, OutputMode.from_string("json"))
        with self.assertRaises(ValueError):
            OutputMode.from_string("yaml")


class PathsTester(unittest.TestCase):
    def test_env_overrides(self):
        with mock.patch.dict(os.environ, {"TORUS_HOMFLY_TEST_DIR": "/tmp/elsewhere"}):
            self.assertEqual("/tmp/elsewhere", str(path_or_default("/tmp/default", "TORUS_HOMFLY_TEST_DIR")))
        self.assertEqual("character_tables.json", character_cache_file().name)

    def test_persistence_flag(self):
        with mock.patch.dict(os.environ, {"TORUS_HOMFLY_PERSIST": "1"}):
            self.assertTrue(persistence_requested())
        with mock.patch.dict(os.environ, {"TORUS_HOMFLY_PERSIST": "0"}):
            self.assertFalse(persistence_requested())


class MemoryWatchdogTester(unittest.TestCase):
    def test_disabled_at_zero(self):
        self.assertIsNone(start_memory_watchdog(0))

    def test_reads_resident_memory(self):
        self.assertGreater(resident_memory_mb(), 0)

    def test_generous_limit_keeps_running(self):
        thread = start_memory_watchdog(10**7, interval=0.01)
        self.assertIsNotNone(thread)
        self.assertTrue(thread.daemon)
        self.assertTrue(thread.is_alive())


class BannerTester(unittest.TestCase):
    def test_frame(self):
        self.assertEqual("\n#######\n# abc #\n#######\n", banner("abc"))
        self.assertIn("# a    #", banner("a\nabcd"))


if __name__ == "__main__":
    unittest.main()
