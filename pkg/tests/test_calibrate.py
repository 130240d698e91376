from hennings.calibrate import FINAL_CHECK, all_conventions, calibrate, convention_checks
from hennings.universal import STANDARD_CONVENTION, LabelConvention


def test_search_space():
    convs = all_conventions()
    assert len(convs) == 162
    assert len({c.key() for c in convs}) == 162


def test_unique_convention_at_l2():
    res = calibrate(2)
    assert res.passing == [STANDARD_CONVENTION]
    assert res.convention.describe()["first_factor_on"] == "over"


def test_standard_convention_all_checks():
    res = convention_checks(STANDARD_CONVENTION, 2)
    assert FINAL_CHECK in res and all(res.values())


def test_mirror_convention_fails_only_the_full_twist():
    mirror = LabelConvention(over_first=False, extrema=(-1, 0, 1, 0))
    res = convention_checks(mirror, 3)
    failed = [k for k, v in res.items() if not v]
    assert failed == ["full twist = R R21"]


def test_explicit_cap_must_be_unlabelled():
    res = convention_checks(LabelConvention(True, (1, 1, -1, 0)), 2)
    assert res["explicit cap"] is False
