#pragma once

#include <stdexcept>
#include <string>

namespace tableau {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

class InvalidBasis : public Error {
public:
    using Error::Error;
};

class NonGenericBasis : public Error {
public:
    using Error::Error;
};

class InvalidCharacters : public Error {
public:
    using Error::Error;
};

class InvalidPresentation : public Error {
public:
    using Error::Error;
};

class NotInTableau : public Error {
public:
    NotInTableau() : Error("element does not lie in the tableau") {}
};

class NotEndovolutive : public Error {
public:
    using Error::Error;
};

class ZeroCovector : public Error {
public:
    ZeroCovector() : Error("covector vanishes on U (phi_1 = ... = phi_ell = 0)") {}
};

class CensusTooLarge : public Error {
public:
    using Error::Error;
};

/// Malformed rational literal or document field; the message names the field.
class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidDocument : public Error {
public:
    using Error::Error;
};

} // namespace tableau
