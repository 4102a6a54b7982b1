"""Typed JSON records.

Analysis results are declared as :class:`Record` subclasses whose class
attributes are :class:`Field` declarations. A record can describe itself as
a JSON Schema, serialize to plain JSON data and be rebuilt from validated
data::

    class Interval(Record):
        low = Field(int)
        high = Field(int, optional=True)

Records are frozen once constructed.
"""
import json
from abc import ABCMeta, abstractmethod
from collections import OrderedDict as _OrderedDict
from collections.abc import Mapping as _Mapping, Sequence as _Sequence

import jsonschema


class SerializableBase(metaclass=ABCMeta):
    pass


class SimpleType(SerializableBase):
    pass


SimpleType.register(int)
SimpleType.register(float)
SimpleType.register(bool)
SimpleType.register(str)

SIMPLETYPE_SCHEMAS = {
    bool: {'type': 'boolean'},
    int: {'type': 'integer'},
    float: {'type': 'number'},
    str: {'type': 'string'},
}


class Serializable(SerializableBase):

    @classmethod
    @abstractmethod
    def schema(cls):
        pass

    @abstractmethod
    def serialize(self):
        pass

    @classmethod
    @abstractmethod
    def deserialize(cls, data):
        pass


def schema(python_type):
    if issubclass(python_type, Serializable):
        return python_type.schema()
    elif issubclass(python_type, SimpleType):
        return SIMPLETYPE_SCHEMAS[python_type]
    else:
        raise TypeError('{} has no JSON schema'.format(python_type))


def serialize(obj):
    if isinstance(obj, Serializable):
        return obj.serialize()
    elif isinstance(obj, SimpleType):
        return obj
    else:
        raise TypeError('{!r} is not serializable'.format(obj))


def deserialize(data, python_type):
    if issubclass(python_type, Serializable):
        return python_type.deserialize(data)
    elif issubclass(python_type, SimpleType):
        jsonschema.validate(data, schema(python_type))
        return python_type(data)
    else:
        raise TypeError('cannot deserialize to {}'.format(python_type))


def dumps(obj, **kwargs):
    """Serialize obj and encode it as a JSON string."""
    return json.dumps(serialize(obj), **kwargs)


def _check_serializable_type(python_type):
    if not isinstance(python_type, type):
        raise TypeError('{} is not a type'.format(python_type))
    if not issubclass(python_type, SerializableBase):
        raise TypeError('{} is not a supported type'.format(python_type))


def _conforms(value, python_type):
    if isinstance(python_type, ChoiceMeta):
        return isinstance(value, ChoiceMember) and value.choice is python_type
    if python_type in (int, float) and isinstance(value, bool):
        return False
    if python_type is float:
        return isinstance(value, (int, float))
    return isinstance(value, python_type)


def _freeze(value):
    if isinstance(value, ContainerBase):
        return value.frozen()
    return value


def _coerce(value, python_type):
    """Wrap plain lists and dicts into the declared container type."""
    if isinstance(python_type, ContainerMeta) and not isinstance(
            value, python_type):
        if issubclass(python_type, Array) and isinstance(value, (list, tuple)):
            return python_type(value)
        if issubclass(python_type, Table) and isinstance(value, dict):
            return python_type(value)
    return value


class ContainerMeta(ABCMeta):

    def __new__(metacls, name, bases, classdict, item_type=None):
        if item_type is not None:
            _check_serializable_type(item_type)
        cls = super().__new__(metacls, name, bases, classdict)
        cls._subclass_cache = {}
        cls._item_type = item_type or getattr(cls, '_item_type', None)
        return cls

    def __init__(self, *args, **kwargs):
        pass

    def __getitem__(self, item_type):
        _check_serializable_type(item_type)
        if self._item_type is not None:
            raise TypeError(
                'item type already set as {}'.format(self._item_type)
            )
        try:
            cls = self._subclass_cache[item_type]
        except KeyError:
            name = '{}[{}]'.format(self.__name__, item_type.__name__)
            cls = self.__class__(
                name, (self,) + self.__bases__, dict(self.__dict__),
                item_type=item_type
            )
            self._subclass_cache[item_type] = cls
        return cls


class ContainerBase(Serializable, metaclass=ContainerMeta):

    _frozen = False

    def __init__(self, *args, **kwargs):
        if self._item_type is None:
            raise TypeError(
                'container {} has no item type - use square brackets to set'
                .format(self.__class__.__name__)
            )
        super().__init__(*args, **kwargs)

    def _require_mutable(self):
        if self._frozen:
            raise TypeError('{} held by a record is read-only'.format(
                self.__class__.__name__
            ))

    def frozen(self):
        """Return a read-only copy, nested containers included."""
        copy = self._copy_with(_freeze)
        copy._frozen = True
        return copy

    def __repr__(self):
        return '{}({})'.format(self.__class__.__name__, super().__repr__())

    @classmethod
    def _checked(cls, item):
        item = _coerce(item, cls._item_type)
        if not _conforms(item, cls._item_type):
            raise TypeError('entries must be of type {}'.format(
                cls._item_type
            ))
        return item


class Array(ContainerBase, list):
    """A JSON array whose entries share one type."""

    def __init__(self, iterable=()):
        super().__init__(self._checked(item) for item in iterable)

    def _copy_with(self, convert):
        return self.__class__(convert(item) for item in self)

    def __setitem__(self, index, value):
        self._require_mutable()
        if isinstance(index, slice):
            value = [self._checked(item) for item in value]
        else:
            value = self._checked(value)
        super().__setitem__(index, value)

    def __delitem__(self, index):
        self._require_mutable()
        super().__delitem__(index)

    def __iadd__(self, other):
        self.extend(other)
        return self

    def __imul__(self, times):
        self._require_mutable()
        return super().__imul__(times)

    def append(self, value):
        self._require_mutable()
        super().append(self._checked(value))

    def insert(self, index, value):
        self._require_mutable()
        super().insert(index, self._checked(value))

    def extend(self, iterable):
        self._require_mutable()
        super().extend(self._checked(item) for item in iterable)

    def pop(self, index=-1):
        self._require_mutable()
        return super().pop(index)

    def remove(self, value):
        self._require_mutable()
        super().remove(value)

    def clear(self):
        self._require_mutable()
        super().clear()

    def sort(self, *, key=None, reverse=False):
        self._require_mutable()
        super().sort(key=key, reverse=reverse)

    def reverse(self):
        self._require_mutable()
        super().reverse()

    @classmethod
    def schema(cls):
        return {
            'type': 'array',
            'items': schema(cls._item_type)
        }

    def serialize(self):
        return [serialize(item) for item in self]

    @classmethod
    def deserialize(cls, data: _Sequence):
        jsonschema.validate(data, cls.schema())
        return cls(deserialize(entry, cls._item_type) for entry in data)


class Table(ContainerBase, dict):
    """A JSON object with string keys whose values share one type."""

    @staticmethod
    def _check_key_type(key):
        if not isinstance(key, str):
            raise TypeError('keys must be of type str')

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        for key, value in self.items():
            self._check_key_type(key)
            dict.__setitem__(self, key, self._checked(value))

    def _copy_with(self, convert):
        return self.__class__(
            {key: convert(value) for key, value in self.items()}
        )

    def __setitem__(self, key, value):
        self._require_mutable()
        self._check_key_type(key)
        super().__setitem__(key, self._checked(value))

    def __delitem__(self, key):
        self._require_mutable()
        super().__delitem__(key)

    def __ior__(self, other):
        self.update(other)
        return self

    def update(self, *args, **kwargs):
        self._require_mutable()
        for key, value in dict(*args, **kwargs).items():
            self[key] = value

    def setdefault(self, key, default=None):
        if key not in self:
            self[key] = default
        return self[key]

    def pop(self, key, *default):
        self._require_mutable()
        return super().pop(key, *default)

    def popitem(self):
        self._require_mutable()
        return super().popitem()

    def clear(self):
        self._require_mutable()
        super().clear()

    @classmethod
    def schema(cls):
        return {
            'type': 'object',
            'additionalProperties': schema(cls._item_type)
        }

    def serialize(self):
        return {key: serialize(value) for key, value in self.items()}

    @classmethod
    def deserialize(cls, data: _Mapping):
        jsonschema.validate(data, cls.schema())
        return cls({
            key: deserialize(value, cls._item_type)
            for key, value in data.items()
        })


def _is_descriptor(obj):
    """Returns True if obj is a descriptor, False otherwise."""
    return (hasattr(obj, '__get__') or
            hasattr(obj, '__set__') or
            hasattr(obj, '__delete__'))


class ChoiceDict(dict):

    def __init__(self):
        super().__init__()
        self.members = _OrderedDict()

    def __setitem__(self, key, value):
        if not key.startswith('_') and not _is_descriptor(value):
            if key in self.members:
                raise TypeError('{} already defined as: {}'.format(
                    key, self.members[key]
                ))
            if not isinstance(value, str):
                raise TypeError('choice {} must have a str value'.format(key))
            self.members[key] = value
        else:
            super().__setitem__(key, value)


class ChoiceMember(Serializable):

    def __init__(self, choice, name, value):
        self.choice = choice
        self.name = name
        self.value = value

    def __repr__(self):
        return '{}.{}'.format(self.choice.__name__, self.name)

    def __str__(self):
        return self.value

    def __eq__(self, other):
        return (isinstance(other, ChoiceMember) and
                self.choice is other.choice and
                self.name == other.name)

    def __hash__(self):
        return hash((self.choice.__name__, self.name))

    def schema(self):
        return self.choice.schema()

    def serialize(self):
        return self.value

    def deserialize(self, data):
        return self.choice.deserialize(data)


class ChoiceMeta(ABCMeta):

    @classmethod
    def __prepare__(metacls, name, bases, **kwargs):
        return ChoiceDict()

    def __new__(metacls, name, bases, classdict):
        cls = super().__new__(metacls, name, bases, classdict)

        definitions = _OrderedDict()
        definitions.update(getattr(cls, '_choice_definitions', {}))
        definitions.update(classdict.members)
        cls._choice_definitions = definitions

        name_map = _OrderedDict()
        value_map = {}
        for member_name, value in definitions.items():
            if value in value_map:
                raise ValueError('choice values must be unique')
            member = ChoiceMember(cls, member_name, value)
            name_map[member_name] = member
            value_map[value] = member
        cls._name_map = name_map
        cls._value_map = value_map

        return cls

    def __iter__(cls):
        return iter(cls._name_map.values())

    def __len__(cls):
        return len(cls._name_map)

    def __getitem__(cls, name):
        return cls._name_map[name]

    def __getattr__(cls, name):
        if name.startswith('_'):
            raise AttributeError(name)
        try:
            return cls._name_map[name]
        except KeyError:
            raise AttributeError(name) from None

    def __call__(cls, value):
        if isinstance(value, ChoiceMember) and value.choice is cls:
            return value
        return cls.from_value(value)

    def from_value(cls, value):
        try:
            return cls._value_map[value]
        except (KeyError, TypeError):
            raise ValueError('{!r} is not a valid {}'.format(
                value, cls.__name__
            )) from None


class Choice(Serializable, metaclass=ChoiceMeta):
    """A closed set of named string values."""

    @classmethod
    def schema(cls):
        return {'enum': [member.value for member in cls]}

    def serialize(self):
        raise TypeError('cannot serialize a choice, only its members')

    @classmethod
    def deserialize(cls, data):
        jsonschema.validate(data, cls.schema())
        return cls.from_value(data)


class Field:

    def __init__(self, type, optional=False):
        _check_serializable_type(type)
        self.type = type
        self.optional = bool(optional)

    def __repr__(self):
        return '{}(type={}, optional={})'.format(
            self.__class__.__name__, self.type, self.optional
        )


class RecordDict(dict):

    def __init__(self):
        super().__init__()
        self.fields = _OrderedDict()

    def __setitem__(self, key, value):
        if isinstance(value, Field):
            self.fields[key] = value
        super().__setitem__(key, value)


class RecordMeta(ABCMeta):

    @classmethod
    def __prepare__(metacls, name, bases, **kwargs):
        return RecordDict()

    def __new__(metacls, name, bases, classdict):
        cls = super().__new__(metacls, name, bases, classdict)

        fields = _OrderedDict()
        fields.update(getattr(cls, '_record_fields', {}))
        fields.update(classdict.fields)
        cls._record_fields = fields

        return cls


class Record(Serializable, metaclass=RecordMeta):
    """A frozen, schema-validated JSON object."""

    def __init__(self, **kwargs):
        classname = self.__class__.__name__
        for name, field in self._record_fields.items():
            if name in kwargs:
                value = _coerce(kwargs[name], field.type)
            elif field.optional:
                value = None
            else:
                raise TypeError(
                    "{} missing a required field '{}'".format(classname, name)
                )
            if not (_conforms(value, field.type) or
                    (value is None and field.optional)):
                qualifier = ' or None' if field.optional else ''
                raise TypeError('{} must be a {}{}'.format(
                    name, field.type.__name__, qualifier
                ))
            object.__setattr__(self, name, _freeze(value))

        # Calling set() on a dict creates a set of its keys
        unused = set(kwargs) - set(self._record_fields)
        if unused:
            raise TypeError(
                "{} got unexpected keyword argument(s) {}"
                .format(classname, sorted(unused))
            )

    def __setattr__(self, name, value):
        if name not in self._record_fields:
            raise AttributeError('{} is not a valid field'.format(name))
        raise AttributeError('{} is frozen'.format(self.__class__.__name__))

    def __repr__(self):
        parts = []
        for name in self._record_fields:
            parts.append('{}={!r}'.format(name, getattr(self, name)))
        return '{}({})'.format(self.__class__.__name__, ', '.join(parts))

    def __eq__(self, other):
        if type(self) != type(other):
            return False
        for name in self._record_fields:
            if getattr(self, name) != getattr(other, name):
                return False
        return True

    __hash__ = None

    def replace(self, **changes):
        """Return a copy of this record with some fields changed."""
        values = {name: getattr(self, name) for name in self._record_fields}
        values.update(changes)
        return self.__class__(**values)

    @classmethod
    def schema(cls):
        properties = {}
        required = []
        for name, field in cls._record_fields.items():
            properties[name] = schema(field.type)
            if not field.optional:
                required.append(name)
        json_schema = {
            'type': 'object',
            'properties': properties,
            'additionalProperties': False
        }
        if required:
            json_schema['required'] = required
        return json_schema

    def serialize(self):
        properties = {}
        for name, field in self._record_fields.items():
            value = getattr(self, name)
            if value is None and field.optional:
                continue
            properties[name] = serialize(value)
        return properties

    @classmethod
    def deserialize(cls, data: dict):
        jsonschema.validate(data, cls.schema())
        kwargs = {}
        for name, value in data.items():
            field = cls._record_fields[name]
            kwargs[name] = deserialize(value, field.type)
        return cls(**kwargs)
