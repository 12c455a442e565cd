#ifndef SELORDER_ERROR_HPP
#define SELORDER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace selorder {

/* Input outside the mathematical domain of an operation (wrong
 * discriminant, zero polynomial, dimension mismatch, ...). */
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

class UnsupportedError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/* A theorem's standing hypothesis does not hold for the input, e.g. a
 * prime that ramifies in L was handed to the unramified local theory. */
class HypothesisError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

class RamifiedInLError : public HypothesisError
{
  public:
    using HypothesisError::HypothesisError;
};

class BadPrimeError : public DomainError
{
  public:
    using DomainError::DomainError;
};

class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

} // namespace selorder

#endif /* SELORDER_ERROR_HPP */
