"""Exact representation types of the finite Clifford groups Pin/Spin(p,q)."""

from clifftype._core import (
    CapError,
    ConjugacyClassReport,
    GroupKind,
    Signature,
    SignedMonomial,
    SpinorIrrepInfo,
    TypeValue,
    abelianization_order,
    build_gammas,
    burnside_spinor_solve,
    center,
    character_norm,
    check_periodicity,
    commutator_subgroup,
    commutes,
    conjugacy_class_count_structural,
    conjugacy_classes_brute,
    constituent_count,
    enumerate_group,
    fs_indicator_brute,
    fs_indicator_closed,
    fs_sum_matrix,
    grade,
    group_order,
    metric_sign,
    mono_mul,
    mono_square_sign,
)

PIN = GroupKind.PIN
SPIN = GroupKind.SPIN

__all__ = [name for name in dir() if not name.startswith("_")]
