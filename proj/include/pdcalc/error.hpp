#pragma once

#include <stdexcept>
#include <string>

namespace pdcalc {

// Failure classes surfaced by the calculus. Each maps to one CLI exit code:
// validation-type failures exit 2, degenerate computations exit 3, partition
// mismatches exit 4.
enum class Errc {
    negative_prob,         // probability below -TOL_SUM
    sum_violation,         // distribution mass off by more than TOL_SUM
    negative_credence,     // negative credence where only discounting is defined
    range,                 // scalar outside its documented interval
    validation,            // malformed value or unmet structural precondition
    parse,                 // schema-violating evidence file
    io,                    // unreadable or unwritable file
    zero_total_credence,   // merger weight within TOL_SUM of zero
    degenerate,            // result carries no credence mass
    condition_on_null,     // conditioning event has probability <= TOL_SUM
    partition_mismatch,    // operands defined over different partitions
};

const char* errc_name(Errc code);

// Exit code the CLI reports for a given failure class.
int errc_exit_code(Errc code);

class CalcError : public std::runtime_error {
public:
    CalcError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), m_code(code) {}

    Errc code() const { return m_code; }

private:
    Errc m_code;
};

} // namespace pdcalc
