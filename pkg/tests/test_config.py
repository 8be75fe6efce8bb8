"""Tests for configuration management."""
import os
import sys
import tempfile
import unittest
import configparser
from unittest.mock import patch

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from isohorn.constants import CELL_CAP, DEFAULT_PRIME, DEFAULT_SEED, DEFAULT_TRIALS, ENV_PRIME, ENV_SEED, RANK_CAP
from isohorn.models import ConfigManager


class ConfigTestCase(unittest.TestCase):
    """Temporary config path with the environment overrides cleared."""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.config_path = os.path.join(self.temp_dir, "isohorn.ini")
        self.env = patch.dict(os.environ)
        self.env.start()
        os.environ.pop(ENV_PRIME, None)
        os.environ.pop(ENV_SEED, None)

    def tearDown(self):
        self.env.stop()
        if os.path.exists(self.config_path):
            os.remove(self.config_path)
        os.rmdir(self.temp_dir)

    def write(self, **values):
        config = configparser.ConfigParser()
        config.add_section("Settings")
        for key, value in values.items():
            config.set("Settings", key, value)
        with open(self.config_path, "w") as f:
            config.write(f)


class TestConfigDefaults(ConfigTestCase):
    """Test configuration default values."""

    def test_default_config_values(self):
        """A missing file is created with the defaults."""
        config = ConfigManager(self.config_path)
        self.assertTrue(os.path.exists(self.config_path))
        self.assertEqual(config.prime, DEFAULT_PRIME)
        self.assertEqual(config.seed, DEFAULT_SEED)
        self.assertEqual(config.trials, DEFAULT_TRIALS)
        self.assertEqual(config.workers, 1)
        self.assertFalse(config.rational_mode)
        self.assertEqual(config.log_level, "INFO")
        self.assertEqual(config.rank_cap, RANK_CAP)
        self.assertEqual(config.cell_cap, CELL_CAP)

    def test_default_file_contents(self):
        ConfigManager(self.config_path)
        written = configparser.ConfigParser()
        written.read(self.config_path)
        self.assertEqual(written.get("Settings", "prime"), "2147483647")
        self.assertEqual(written.get("Settings", "rational_mode"), "false")

    def test_field_prime(self):
        config = ConfigManager(self.config_path)
        self.assertEqual(config.field_prime(), DEFAULT_PRIME)
        config.set("rational_mode", True)
        self.assertIsNone(config.field_prime())


class TestConfigValidation(ConfigTestCase):
    """Test configuration validation."""

    def test_values_from_file(self):
        self.write(prime="101", seed="7", trials="3", workers="4", rational_mode="yes")
        config = ConfigManager(self.config_path)
        self.assertEqual((config.prime, config.seed, config.trials, config.workers), (101, 7, 3, 4))
        self.assertTrue(config.rational_mode)

    def test_missing_keys_are_merged(self):
        self.write(seed="5")
        config = ConfigManager(self.config_path)
        self.assertEqual(config.seed, 5)
        self.assertEqual(config.prime, DEFAULT_PRIME)
        self.assertEqual(config.config.get("Settings", "cell_cap"), str(CELL_CAP))

    def test_invalid_integer_falls_back(self):
        self.write(trials="many")
        config = ConfigManager(self.config_path)
        self.assertEqual(config.trials, DEFAULT_TRIALS)

    def test_values_are_clamped(self):
        self.write(trials="0", workers="-3", rank_cap="0")
        config = ConfigManager(self.config_path)
        self.assertEqual(config.trials, 1)
        self.assertEqual(config.workers, 1)
        self.assertEqual(config.rank_cap, 1)

    def test_small_prime_rejected(self):
        self.write(prime="2")
        config = ConfigManager(self.config_path)
        self.assertEqual(config.prime, DEFAULT_PRIME)

    def test_boolean_values(self):
        config = ConfigManager(self.config_path)
        for value in ['true', 'True', '1', 'yes', 'ON']:
            config.config.set("Settings", "rational_mode", value)
            self.assertTrue(config._safe_getboolean("Settings", "rational_mode"), value)
        for value in ['false', 'FALSE', '0', 'no', 'off']:
            config.config.set("Settings", "rational_mode", value)
            self.assertFalse(config._safe_getboolean("Settings", "rational_mode"), value)


class TestEnvironmentOverrides(ConfigTestCase):
    """Test ISOHORN_PRIME and ISOHORN_SEED."""

    def test_environment_beats_file(self):
        self.write(prime="101", seed="7")
        os.environ[ENV_PRIME] = "103"
        os.environ[ENV_SEED] = "11"
        config = ConfigManager(self.config_path)
        self.assertEqual(config.prime, 103)
        self.assertEqual(config.seed, 11)

    def test_bad_environment_ignored(self):
        self.write(seed="7")
        os.environ[ENV_SEED] = "seven"
        config = ConfigManager(self.config_path)
        self.assertEqual(config.seed, 7)


class TestConfigFileOperations(ConfigTestCase):
    """Test config file read/write operations."""

    def test_save_round_trip(self):
        config = ConfigManager(self.config_path)
        config.set("trials", 5)
        config.set("log_level", "DEBUG")
        config.save()

        reloaded = ConfigManager(self.config_path)
        self.assertEqual(reloaded.trials, 5)
        self.assertEqual(reloaded.log_level, "DEBUG")

    def test_as_dict_and_repr(self):
        config = ConfigManager(self.config_path)
        data = config.as_dict()
        self.assertEqual(data["prime"], DEFAULT_PRIME)
        self.assertEqual(config.get("seed"), DEFAULT_SEED)
        self.assertIsNone(config.get("missing"))
        self.assertIn("ConfigManager(", repr(config))


if __name__ == '__main__':
    unittest.main()
