"""Tests for configuration parsing and validation."""

import pytest

from config import RunConfig, parse_config, require_bound_states
from utils.errors import ConfigError

BASE = """\
# reference case
ETA=0.5
OMEGA=2
MASS=1
DIPOLE=0.001
E0=1
"""


@pytest.fixture
def config_file(tmp_path):
    def write(text: str):
        path = tmp_path / "run.cfg"
        path.write_text(text)
        return str(path)
    return write


class TestParseConfig:

    def test_file_values(self, config_file):
        cfg = parse_config(config_file(BASE + "N_MAX=2\nSPIN=1\n"))
        assert cfg.eta == 0.5
        assert cfg.omega == 2.0
        assert cfg.n_max == 2
        assert cfg.spin == "+1"
        assert cfg.spins() == (1,)
        assert cfg.particle().coupling == pytest.approx(0.001)

    def test_defaults(self, config_file):
        cfg = parse_config(config_file(BASE))
        assert cfg.grid_points == 8001
        assert cfg.rho_inf_sigma == 36.0
        assert cfg.weak_field_threshold == 0.01
        assert cfg.spins() == (1, -1)
        assert list(cfg.l_range()) == [-2, -1, 0, 1, 2]
        assert cfg.strict is False

    def test_overrides_win(self, config_file):
        cfg = parse_config(config_file(BASE), {"eta": 0.8, "n_max": None, "strict": True})
        assert cfg.eta == 0.8
        assert cfg.n_max == 3
        assert cfg.strict is True

    def test_flags_only(self):
        cfg = parse_config(None, {"eta": 1.0, "omega": 1.0, "mass": 1.0, "dipole": 0.01, "e0": 1.0})
        assert cfg.background().eta == 1.0

    def test_echo_round_trips(self, config_file):
        cfg = parse_config(config_file(BASE))
        assert RunConfig(**cfg.echo()) == cfg


class TestConfigErrors:
    """Every rejection names the offending key."""

    def test_eta_above_one(self, config_file):
        with pytest.raises(ConfigError) as info:
            parse_config(config_file(BASE.replace("ETA=0.5", "ETA=1.5")))
        assert info.value.key == "eta"

    def test_disclination_override(self, config_file):
        cfg = parse_config(config_file(BASE.replace("ETA=0.5", "ETA=1.5") + "ALLOW_DISCLINATION=true\n"))
        assert cfg.background().eta == 1.5

    def test_unknown_key(self, config_file):
        with pytest.raises(ConfigError) as info:
            parse_config(config_file(BASE + "COLOR=blue\n"))
        assert info.value.key == "color"
        assert "unknown key" in str(info.value)

    def test_missing_key(self, config_file):
        with pytest.raises(ConfigError) as info:
            parse_config(config_file(BASE.replace("MASS=1\n", "")))
        assert info.value.key == "mass"
        assert "missing" in str(info.value)

    @pytest.mark.parametrize("line,key", [
        ("DIPOLE=0", "dipole"),
        ("N_MAX=11", "n_max"),
        ("GRID_POINTS=50", "grid_points"),
        ("RHO_INF_SIGMA=10", "rho_inf_sigma"),
        ("LOG_LEVEL=loud", "log_level"),
        ("OMEGA=-1", "omega"),
    ])
    def test_out_of_range(self, config_file, line, key):
        name = line.split("=")[0]
        text = "".join(row + "\n" for row in BASE.splitlines() if not row.startswith(name + "="))
        with pytest.raises(ConfigError) as info:
            parse_config(config_file(text + line + "\n"))
        assert info.value.key == key

    def test_l_range_order(self, config_file):
        with pytest.raises(ConfigError) as info:
            parse_config(config_file(BASE + "L_MIN=2\nL_MAX=-2\n"))
        assert info.value.key == "l_min"

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="not found"):
            parse_config(str(tmp_path / "absent.cfg"))

    def test_static_frame_has_no_bound_states(self, config_file):
        cfg = parse_config(config_file(BASE.replace("OMEGA=2", "OMEGA=0")))
        with pytest.raises(ConfigError) as info:
            require_bound_states(cfg)
        assert info.value.key == "omega"
