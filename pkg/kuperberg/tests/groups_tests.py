from kuperberg.evaluator import commuting_triples, free_abelian_presentation, group_algebra_invariant, hom_count, invariant_ratio
from kuperberg.exceptions import BudgetExceededError
from kuperberg.heegaard import GroupPresentation, fundamental_group_presentation
from kuperberg.hopf.catalog import named_group
from kuperberg.tests.utils import SimpleTestCase, TestDiagramFactory


class HomCountTests(SimpleTestCase):
    def test_weeks_group_has_few_small_quotients(self) -> None:
        group: str
        for group in ("Z2", "Z3", "Z4", "S3"):
            with self.subTest(group=group):
                self.assertEqual(group_algebra_invariant(TestDiagramFactory.create("weeks"), named_group(group)), 1)

    def test_weeks_first_homology_is_five_torsion(self) -> None:
        self.assertEqual(group_algebra_invariant(TestDiagramFactory.create("weeks"), named_group("Z5")), 25)

    def test_sphere_and_s1xs2(self) -> None:
        self.assertEqual(group_algebra_invariant(TestDiagramFactory.create("sphere3"), named_group("S3")), 1)
        self.assertEqual(group_algebra_invariant(TestDiagramFactory.create("s1xs2"), named_group("S3")), 6)

    def test_trivial_presentation(self) -> None:
        self.assertEqual(hom_count(GroupPresentation((), ()), named_group("Q8")), 1)

    def test_budget(self) -> None:
        with self.assertRaises(BudgetExceededError):
            hom_count(fundamental_group_presentation(TestDiagramFactory.create("weeks")), named_group("S3"), budget=10)


class TorusTests(SimpleTestCase):
    def test_commuting_triples(self) -> None:
        self.assertEqual(commuting_triples(named_group("Z2")), 8)
        self.assertEqual(commuting_triples(named_group("Z3")), 27)
        self.assertEqual(commuting_triples(named_group("S3")), 48)
        self.assertEqual(commuting_triples(named_group("Q8")), 176)

    def test_free_abelian_presentation(self) -> None:
        presentation: GroupPresentation = free_abelian_presentation(3)

        self.assertEqual(presentation.generators, ("a1", "a2", "a3"))
        self.assertEqual(len(presentation.relators), 3)
        self.assertEqual(hom_count(presentation, named_group("S3")), commuting_triples(named_group("S3")))

    def test_torus_diagram_counts_commuting_triples(self) -> None:
        group: str
        for group in ("Z2", "S3", "D4"):
            with self.subTest(group=group):
                self.assertEqual(
                    group_algebra_invariant(TestDiagramFactory.create("torus3"), named_group(group)),
                    commuting_triples(named_group(group))
                )

    def test_invariant_ratio_is_one(self) -> None:
        group: str
        for group in ("Z2", "S3"):
            with self.subTest(group=group):
                self.assertEqual(invariant_ratio(named_group(group)), 1)
