"""
Tests for shared application utilities
"""

import json
import logging
import os

import pytest

from shared.app_utils import (
    ConfigLoader,
    Stopwatch,
    atomic_write,
    get_worker_count,
    parallel_map,
    resolve_log_level,
)


class TestWorkerPool:
    """parallel_map ordering and worker resolution"""

    def test_worker_count_from_env(self, monkeypatch):
        assert get_worker_count() == 1
        monkeypatch.setenv('CINFTY_WORKERS', '4')
        assert get_worker_count() == 4
        monkeypatch.setenv('CINFTY_WORKERS', 'many')
        assert get_worker_count() == 1
        assert get_worker_count(default=3) == 3
        assert get_worker_count(0) == 1

    @pytest.mark.parametrize("workers", [1, 2, 8])
    def test_results_in_input_order(self, workers):
        assert parallel_map(lambda x: x * x, range(20), workers=workers) == [x * x for x in range(20)]

    def test_empty_input(self):
        assert parallel_map(str, [], workers=4) == []


class TestLogLevels:
    """Log level resolution"""

    def test_names_and_numbers(self):
        assert resolve_log_level('debug') == logging.DEBUG
        assert resolve_log_level(logging.ERROR) == logging.ERROR

    def test_env_default(self, monkeypatch):
        assert resolve_log_level() == logging.WARNING
        monkeypatch.setenv('CINFTY_LOG_LEVEL', 'INFO')
        assert resolve_log_level() == logging.INFO

    def test_invalid(self):
        with pytest.raises(ValueError):
            resolve_log_level('chatty')


class TestConfigLoader:
    """Environment-aware config loading"""

    def test_missing_file_is_empty(self, config_dir):
        ConfigLoader.set_environment('production')
        assert ConfigLoader.load() == {}
        assert ConfigLoader.get_config_path().endswith('production.json')

    def test_reads_environment_file(self, config_dir):
        (config_dir / 'test.json').write_text(json.dumps({'transfer': {'sample_size': 3}}))
        ConfigLoader.set_environment('test')
        assert ConfigLoader.get_value('transfer', 'sample_size') == 3
        assert ConfigLoader.get_section('verify') == {}

    def test_invalid_environment(self):
        with pytest.raises(ValueError):
            ConfigLoader.set_environment('staging')

    def test_env_overrides(self, config_file, monkeypatch):
        monkeypatch.setenv('CINFTY_CONFIG_TRANSFER_SAMPLE_SIZE', '500')
        monkeypatch.setenv('CINFTY_CONFIG_TRANSFER_CALIBRATION_DIMS', '2,3,4')
        monkeypatch.setenv('CINFTY_CONFIG_COMPLEX_BLOCK_CACHE', 'false')
        ConfigLoader.set_path(config_file())
        config = ConfigLoader.load()
        assert config['transfer']['sample_size'] == 500
        assert config['transfer']['calibration_dims'] == [2, 3, 4]
        assert config['complex']['block_cache'] is False

    def test_config_env_variable(self, config_file, monkeypatch):
        path = config_file(name='elsewhere.json')
        monkeypatch.setenv('CINFTY_CONFIG', path)
        assert ConfigLoader.get_config_path() == path

    def test_malformed_json(self, tmp_path):
        path = tmp_path / 'broken.json'
        path.write_text('{not json')
        ConfigLoader.set_path(str(path))
        assert ConfigLoader.load() == {}


class TestFileOperations:
    """Atomic writes and timing"""

    def test_atomic_write(self, tmp_path):
        target = tmp_path / 'report.json'
        with atomic_write(str(target)) as f:
            f.write('{"passed": true}')
        assert json.loads(target.read_text()) == {'passed': True}
        assert [p.name for p in tmp_path.iterdir()] == ['report.json']

    def test_atomic_write_keeps_old_file_on_error(self, tmp_path):
        target = tmp_path / 'report.json'
        target.write_text('old')
        with pytest.raises(RuntimeError):
            with atomic_write(str(target)) as f:
                f.write('new')
                raise RuntimeError('boom')
        assert target.read_text() == 'old'
        assert len(os.listdir(tmp_path)) == 1

    def test_stopwatch(self):
        watch = Stopwatch()
        assert watch.elapsed >= 0
