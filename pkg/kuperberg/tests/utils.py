import abc
import itertools
from pathlib import Path
from typing import Any, Final, Iterator

from django.test import SimpleTestCase as DjangoSimpleTestCase
from django.test import TestCase as DjangoTestCase

from kuperberg.heegaard.builtins import builtin
from kuperberg.heegaard.diagrams import FramedHeegaardDiagram
from kuperberg.hopf.algebra import HopfAlgebra, TensorElement
from kuperberg.hopf.catalog import catalog, named_group
from kuperberg.hopf.integrals import HALFINT_CONVENTIONS, IntegralPair, compute_integrals
from kuperberg.models import InvariantRecord
from kuperberg.twist.cocycles import (
    Cocycle,
    bicharacter_cocycle,
    component_bicharacter,
    idempotent_cocycle,
    verify_cocycle
)

TEST_DATA_DIRECTORY: Final[Path] = Path(__file__).resolve().parent / "data"


def data_file(file_name: str) -> Path:
    return TEST_DATA_DIRECTORY / file_name


class BaseTestDataFactory(abc.ABC):
    """
        Helper class to provide functions that build (& cache) the test
        objects shared between the kuperberg test suites.
    """

    cache: dict[tuple[str, tuple[tuple[str, Any], ...]], Any]

    @classmethod
    def create(cls, name: str, **kwargs: Any) -> Any:
        """
            Helper function that returns the test object with the given name,
            building it with the options provided in kwargs the first time it
            is requested.
        """

        if "cache" not in cls.__dict__:
            raise RuntimeError("Cannot create a test object because this factory has not been set up. Call the \"set_up()\" class-method first.")

        key: tuple[str, tuple[tuple[str, Any], ...]] = (name, tuple(sorted(kwargs.items())))
        if key not in cls.cache:
            cls.cache[key] = cls.build(name, **kwargs)
        return cls.cache[key]

    @classmethod
    @abc.abstractmethod
    def build(cls, name: str, **kwargs: Any) -> Any:
        raise NotImplementedError

    @classmethod
    def set_up(cls) -> None:
        if "cache" not in cls.__dict__:
            cls.cache = {}


class TestAlgebraFactory(BaseTestDataFactory):
    """ Catalog algebras by catalog name (with an optional "@F<p>" field suffix). """

    @classmethod
    def build(cls, name: str, **kwargs: Any) -> HopfAlgebra:
        return catalog(name, **kwargs)

    @classmethod
    def create(cls, name: str, **kwargs: Any) -> HopfAlgebra:
        return super().create(name, **kwargs)  # type: ignore[no-any-return]


class TestIntegralsFactory(BaseTestDataFactory):
    """ Normalized integrals of the catalog algebra with the given name. """

    @classmethod
    def build(cls, name: str, **kwargs: Any) -> IntegralPair:
        return compute_integrals(TestAlgebraFactory.create(name, **kwargs))

    @classmethod
    def create(cls, name: str, **kwargs: Any) -> IntegralPair:
        return super().create(name, **kwargs)  # type: ignore[no-any-return]


class TestDiagramFactory(BaseTestDataFactory):
    @classmethod
    def build(cls, name: str, **kwargs: Any) -> FramedHeegaardDiagram:
        return builtin(name)

    @classmethod
    def create(cls, name: str, **kwargs: Any) -> FramedHeegaardDiagram:
        return super().create(name, **kwargs)  # type: ignore[no-any-return]


class TestCocycleFactory(BaseTestDataFactory):
    """
        Verified cocycles: "trivial" on any catalog algebra (given as
        `algebra`), "h4_idempotent" (with coefficient `c`) & "z2xz2_bicharacter"
        on the dual group algebra of ℤ₂×ℤ₂.
    """

    @classmethod
    def build(cls, name: str, **kwargs: Any) -> Cocycle:
        if name == "trivial":
            H: HopfAlgebra = TestAlgebraFactory.create(kwargs.get("algebra", "sweedler_h4"))
            return verify_cocycle(H, TensorElement.one(H, 2))
        if name == "h4_idempotent":
            return idempotent_cocycle(TestAlgebraFactory.create("sweedler_h4"), kwargs.get("c", 3))
        if name == "z2xz2_bicharacter":
            H = TestAlgebraFactory.create("dual_group_algebra_Z2xZ2")
            return verify_cocycle(
                H,
                bicharacter_cocycle(named_group("Z2xZ2"), component_bicharacter(named_group("Z2xZ2")), algebra=H)
            )
        raise ValueError(f"Unknown test cocycle {name!r}.")

    @classmethod
    def create(cls, name: str, **kwargs: Any) -> Cocycle:
        return super().create(name, **kwargs)  # type: ignore[no-any-return]


class TestInvariantRecordFactory(BaseTestDataFactory):
    """
        Helper class to provide functions that create test data for
        InvariantRecord object instances. Every call without an explicit
        algebra uses a fresh algebra name, so records never collide.
    """

    test_data_iterators: dict[str, Iterator[Any]]

    @classmethod
    def set_up(cls) -> None:
        super().set_up()
        cls.test_data_iterators = {
            "algebra": (f"test_algebra_{number}" for number in itertools.count(1)),
            "diagram": itertools.cycle(("weeks", "torus3", "sphere3", "s1xs2")),
            "convention": itertools.cycle(HALFINT_CONVENTIONS)
        }

    @classmethod
    def build(cls, name: str, **kwargs: Any) -> InvariantRecord:
        raise TypeError("InvariantRecord test instances are not cached; use create_record().")

    @classmethod
    def create_record(cls, *, save: bool = True, **kwargs: Any) -> InvariantRecord:
        if not hasattr(cls, "test_data_iterators"):
            raise RuntimeError("Cannot create an object instance because the test data has not been loaded into this factory. Call the \"set_up()\" class-method to load the test data.")

        field_name: str
        iterator: Iterator[Any]
        for field_name, iterator in cls.test_data_iterators.items():
            if field_name not in kwargs:
                kwargs[field_name] = next(iterator)
        kwargs.setdefault("value", "1")
        kwargs.setdefault("field", "rational")
        kwargs.setdefault("max_intermediate", 4)
        kwargs.setdefault("term_count", 16)

        if save:
            return InvariantRecord.objects.create(**kwargs)
        return InvariantRecord(**kwargs)


TEST_DATA_FACTORIES: Final[set[type[BaseTestDataFactory]]] = {
    TestAlgebraFactory,
    TestIntegralsFactory,
    TestDiagramFactory,
    TestCocycleFactory,
    TestInvariantRecordFactory
}


def _set_up_test_data_factories(test_data_factories: set[type[BaseTestDataFactory]]) -> None:
    TestDataFactory: type[BaseTestDataFactory]
    for TestDataFactory in test_data_factories:
        TestDataFactory.set_up()


class SimpleTestCase(DjangoSimpleTestCase):
    """ Base for the pure computation suites, which never touch the database. """

    TEST_DATA_FACTORIES: set[type[BaseTestDataFactory]] = TEST_DATA_FACTORIES

    def setUp(self) -> None:
        _set_up_test_data_factories(self.TEST_DATA_FACTORIES)


class TestCase(DjangoTestCase):
    TEST_DATA_FACTORIES: set[type[BaseTestDataFactory]] = TEST_DATA_FACTORIES

    def setUp(self) -> None:
        _set_up_test_data_factories(self.TEST_DATA_FACTORIES)
