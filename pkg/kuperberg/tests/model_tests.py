from django.core.exceptions import ValidationError

from kuperberg.evaluator import InvariantResult, evaluate
from kuperberg.hopf.integrals import HALFINT_ANTIPODE_INVERSE, HALFINT_G_ACTION
from kuperberg.models import InvariantRecord
from kuperberg.tests.utils import TestAlgebraFactory, TestCase, TestDiagramFactory, TestIntegralsFactory, TestInvariantRecordFactory


class InvariantRecordModelTests(TestCase):
    def test_key_must_be_unique(self) -> None:
        record: InvariantRecord = TestInvariantRecordFactory.create_record()

        with self.assertRaises(ValidationError):
            TestInvariantRecordFactory.create_record(
                algebra=record.algebra, diagram=record.diagram, degree_offset=record.degree_offset, convention=record.convention
            )

    def test_other_convention_is_a_separate_record(self) -> None:
        first: InvariantRecord = TestInvariantRecordFactory.create_record(convention=HALFINT_G_ACTION)

        try:
            TestInvariantRecordFactory.create_record(
                algebra=first.algebra, diagram=first.diagram, convention=HALFINT_ANTIPODE_INVERSE
            )
        except ValidationError as validate_error:
            self.fail(f"ValidationError raised: {validate_error}")

    def test_term_counts_validate_min_value(self) -> None:
        field_name: str
        for field_name in ("max_intermediate", "term_count"):
            with self.subTest("Negative count provided", field_name=field_name):
                with self.assertRaisesMessage(ValidationError, "Term counts cannot be negative."):
                    TestInvariantRecordFactory.create_record(**{field_name: -1})

    def test_convention_validate_choices(self) -> None:
        with self.assertRaises(ValidationError):
            TestInvariantRecordFactory.create_record(convention="antipode")

    def test_value_validate_required(self) -> None:
        with self.assertRaisesMessage(ValidationError, "field cannot be blank"):
            TestInvariantRecordFactory.create_record(value="")

    def test_update_unknown_field(self) -> None:
        record: InvariantRecord = TestInvariantRecordFactory.create_record()

        with self.assertRaisesMessage(TypeError, "unexpected keyword arguments: ('genus',)"):
            record.update(genus=2)

    def test_update_saves(self) -> None:
        record: InvariantRecord = TestInvariantRecordFactory.create_record()

        record.update(value="-1")

        record.refresh_from_db()
        self.assertEqual(record.value, "-1")

    def test_str(self) -> None:
        record: InvariantRecord = TestInvariantRecordFactory.create_record(
            algebra="sweedler_h4", diagram="weeks", degree_offset=1, value="-4", save=False
        )

        self.assertEqual(str(record), "Z(weeks, sweedler_h4; degree 1) = -4")


class InvariantRecordManagerTests(TestCase):
    def test_record_stores_result(self) -> None:
        result: InvariantResult = evaluate(
            TestAlgebraFactory.create("group_algebra_Z2"),
            TestIntegralsFactory.create("group_algebra_Z2"),
            TestDiagramFactory.create("torus3")
        )

        record: InvariantRecord = InvariantRecord.objects.record(result)

        self.assertEqual(record.value, "8")
        self.assertEqual(record.field, "rational")
        self.assertEqual(record.convention, result.convention)
        self.assertEqual(record.term_count, result.term_count)

    def test_record_replaces_previous_value(self) -> None:
        stale: InvariantRecord = TestInvariantRecordFactory.create_record(
            algebra="group_algebra_Z2", diagram="torus3", degree_offset=0, convention=HALFINT_G_ACTION, value="7"
        )
        result: InvariantResult = evaluate(
            TestAlgebraFactory.create("group_algebra_Z2"),
            TestIntegralsFactory.create("group_algebra_Z2"),
            TestDiagramFactory.create("torus3"),
            convention=HALFINT_G_ACTION
        )

        record: InvariantRecord = InvariantRecord.objects.record(result)

        self.assertEqual(record.pk, stale.pk)
        self.assertEqual(InvariantRecord.objects.count(), 1)
        stale.refresh_from_db()
        self.assertEqual(stale.value, "8")

    def test_record_convention_override(self) -> None:
        result: InvariantResult = evaluate(
            TestAlgebraFactory.create("k"),
            TestIntegralsFactory.create("k"),
            TestDiagramFactory.create("sphere3"),
            convention=HALFINT_G_ACTION
        )

        record: InvariantRecord = InvariantRecord.objects.record(result, HALFINT_ANTIPODE_INVERSE)

        self.assertEqual(record.convention, HALFINT_ANTIPODE_INVERSE)
