"""Embedding tests: generator images, injectivity, homomorphism, order preservation."""

import random
from fractions import Fraction
from itertools import product

import pytest

from fourfree.ambient import AmbientSignature, element, zero
from fourfree.embedding import OrderFourPresent, build_embedding, embed
from fourfree.presentation import (
    CanonicalDecomposition,
    Presentation,
    canonical_decomposition,
    element_order_in,
)


class TestBuildEmbedding:
    def test_z9(self):
        emap = build_embedding(CanonicalDecomposition(0, ((3, 2),)))
        assert emap.signature == AmbientSignature((3,), 0, 0)
        assert emap.generator_images == (element(emap.signature, d={0: Fraction(1, 9)}),)

    def test_z2_plus_z(self):
        emap = build_embedding(CanonicalDecomposition(1, ((2, 1),)))
        assert emap.signature == AmbientSignature((), 1, 1)
        assert emap.generator_images == (
            element(emap.signature, t=(1,)),
            element(emap.signature, q=(1,)),
        )

    def test_z4_rejected(self):
        with pytest.raises(OrderFourPresent):
            build_embedding(CanonicalDecomposition(0, ((2, 2),)))

    def test_repeated_primes_get_distinct_factors(self):
        emap = build_embedding(CanonicalDecomposition(0, ((3, 1), (3, 2), (5, 1))))
        assert emap.signature.prufer_factors == (3, 3, 5)
        assert [img.d for img in emap.generator_images] == [
            ((0, Fraction(1, 3)),),
            ((1, Fraction(1, 9)),),
            ((2, Fraction(1, 5)),),
        ]

    def test_torsion_relations_respected(self):
        dec = CanonicalDecomposition(1, ((2, 1), (3, 2), (7, 1)))
        emap = build_embedding(dec)
        for (p, e), img in zip(dec.primary_factors, emap.generator_images):
            assert (p**e * img).is_zero
            assert img.order() == p**e

    def test_integer_free_mode(self):
        emap = build_embedding(CanonicalDecomposition(2, ()), free_mode="integer")
        assert emap.signature.free_mode == "integer"


class TestEmbed:
    def test_zero_coefficients(self):
        emap = build_embedding(CanonicalDecomposition(1, ((3, 1),)))
        assert embed(emap, (0, 0)) == zero(emap.signature)

    def test_z9_triple(self):
        emap = build_embedding(CanonicalDecomposition(0, ((3, 2),)))
        assert embed(emap, (3,)) == element(emap.signature, d={0: Fraction(1, 3)})

    def test_z2_plus_z(self):
        emap = build_embedding(CanonicalDecomposition(1, ((2, 1),)))
        assert embed(emap, (1, 5)) == element(emap.signature, t=(1,), q=(5,))

    def test_length_mismatch(self):
        emap = build_embedding(CanonicalDecomposition(1, ()))
        with pytest.raises(ValueError):
            embed(emap, (1, 2))


class TestEmbeddingProperties:
    DECS = [
        CanonicalDecomposition(0, ((2, 1), (2, 1), (3, 1))),
        CanonicalDecomposition(1, ((3, 2),)),
        CanonicalDecomposition(0, ((2, 1), (3, 1), (3, 1), (5, 1))),
        CanonicalDecomposition(2, ()),
    ]

    @pytest.mark.parametrize("dec", DECS)
    def test_injective_on_canonical_representatives(self, dec):
        emap = build_embedding(dec)
        B = 5
        ranges = [range(pe) for pe in dec.factor_orders]
        ranges += [range(-B, B + 1)] * dec.free_rank
        reps = list(product(*ranges))
        assert len(reps) <= 10_000
        images = {embed(emap, coeffs) for coeffs in reps}
        assert len(images) == len(reps)

    @pytest.mark.parametrize("dec", DECS)
    def test_homomorphism(self, dec):
        rng = random.Random(808)
        emap = build_embedding(dec)
        n = dec.n_generators
        for _ in range(100):
            u = [rng.randint(-30, 30) for _ in range(n)]
            v = [rng.randint(-30, 30) for _ in range(n)]
            uv = [a + b for a, b in zip(u, v)]
            assert embed(emap, uv) == embed(emap, u) + embed(emap, v)

    @pytest.mark.parametrize("dec", DECS)
    def test_order_preserved(self, dec):
        rng = random.Random(909)
        emap = build_embedding(dec)
        n_factors = len(dec.primary_factors)
        for _ in range(200):
            coeffs = [rng.randint(-30, 30) for _ in range(dec.n_generators)]
            canonical = [
                c % pe for c, pe in zip(coeffs, dec.factor_orders)
            ] + list(coeffs[n_factors:])
            assert embed(emap, coeffs).order() == element_order_in(dec, canonical)

    @pytest.mark.parametrize("dec", DECS)
    def test_image_is_four_free(self, dec):
        rng = random.Random(111)
        emap = build_embedding(dec)
        for _ in range(300):
            coeffs = [rng.randint(-30, 30) for _ in range(dec.n_generators)]
            assert embed(emap, coeffs).order() != 4


class TestFromPresentation:
    def test_pipeline(self):
        pres = Presentation(2, ((2, 0), (0, 6)))
        emap = build_embedding(canonical_decomposition(pres))
        # Z2 + Z2 + Z3: two t bits, one Pruefer-3 factor, no free part
        assert emap.signature == AmbientSignature((3,), 2, 0)
        orders = sorted(img.order() for img in emap.generator_images)
        assert orders == [2, 2, 3]
