from spatial_anc.harness.validation import run_validation_suite


def test_all_checks_pass_on_configured_scene(small_config):
    checks = run_validation_suite(small_config)
    names = {c.name for c in checks}
    assert names == {
        "sherman_morrison",
        "operator_psd",
        "radiation_oracle",
        "gradient_interior",
        "gradient_penal",
        "wiener_optimality",
        "penal_reduces_to_nlms",
    }
    failed = [(c.name, c.value) for c in checks if not c.passed]
    assert failed == []
