#pragma once

#include <stdexcept>
#include <string>

namespace hzeta {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

class SlowConvergence : public NonConvergence {
public:
    using NonConvergence::NonConvergence;
};

class MethodDisagreement : public Error {
public:
    using Error::Error;
};

}  // namespace hzeta
