#pragma once

#include <stdexcept>
#include <string>

namespace diracepr
{

enum class Errc
{
    invalid_argument,
    off_shell,
    non_transverse,
    zero_state,
    empty_ensemble,
    zero_norm,
    momentum_mismatch,
    undefined_limit,
    singular_configuration,
    parse,
};

inline char const* to_string(Errc code)
{
    switch (code)
    {
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::off_shell: return "OffShell";
        case Errc::non_transverse: return "NonTransverse";
        case Errc::zero_state: return "ZeroState";
        case Errc::empty_ensemble: return "EmptyEnsemble";
        case Errc::zero_norm: return "ZeroNorm";
        case Errc::momentum_mismatch: return "MomentumMismatch";
        case Errc::undefined_limit: return "UndefinedLimit";
        case Errc::singular_configuration: return "SingularConfiguration";
        case Errc::parse: return "ParseError";
    }
    return "Unknown";
}

//! Exception carrying a machine-checkable error category.
class Error : public std::runtime_error
{
  public:
    Error(Errc code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, std::string const& what)
{
    throw Error(code, what);
}

inline void require(bool cond, Errc code, char const* what)
{
    if (!cond)
        fail(code, what);
}

}  // namespace diracepr
