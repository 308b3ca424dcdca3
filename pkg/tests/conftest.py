import random

import pytest

from cocoest import (
    Cocomo1Variant,
    Cocomo2Variant,
    CostDriverSet,
    DevelopmentMode,
    ProjectSpec,
    Rating,
    ScaleFactorSet,
    builtin_default_catalog,
    family_for_variant,
)

# Module is imported by tests as a sibling; make sure pytest reaches it
# without an installed package.
collect_ignore = ["oracle.py"]


@pytest.fixture(scope="session")
def catalog():
    return builtin_default_catalog()


def random_spec(rng: random.Random, variant, catalog) -> ProjectSpec:
    """A valid random ProjectSpec for one model variant.

    Driver/scale-factor ratings are sampled from what the catalog actually
    defines, so every spec is estimable.
    """
    size = rng.uniform(0.3, 900.0)
    mode = rng.choice(list(DevelopmentMode))
    family = family_for_variant(variant)
    drivers = None
    if family is not None:
        table = catalog.em_tables[family]
        ratings = {}
        for driver_id, entry in table.items():
            if rng.random() < 0.8:
                ratings[driver_id] = rng.choice(list(entry.multipliers))
        drivers = CostDriverSet(family, ratings)
    scale_factors = None
    sced_percent = 100.0
    if isinstance(variant, Cocomo2Variant):
        scale_factors = ScaleFactorSet(
            {
                fid: rng.choice(list(entry.values))
                for fid, entry in catalog.sf_table.items()
            }
        )
        sced_percent = rng.uniform(75.0, 160.0)
        mode = None
    return ProjectSpec(
        size_kloc=size,
        variant=variant,
        mode=mode,
        drivers=drivers,
        scale_factors=scale_factors,
        sced_percent=sced_percent,
    )


def oracle_eaf(spec: ProjectSpec, catalog) -> float:
    """EAF recomputed by brute force from the catalog tables."""
    product = 1.0
    for driver_id, entry in catalog.em_tables[spec.drivers.family].items():
        rating = spec.drivers.ratings.get(driver_id, Rating.NOMINAL)
        product *= entry.multipliers[rating]
    return product


def oracle_sf_sum(spec: ProjectSpec, catalog) -> float:
    return sum(
        catalog.sf_table[fid].values[rating]
        for fid, rating in spec.scale_factors.ratings.items()
    )


ALL_VARIANTS = list(Cocomo1Variant) + list(Cocomo2Variant)
