#pragma once

#include <stdexcept>
#include <string>

namespace fracwave {

enum class errc {
    grid_invalid,
    grid_mismatch,
    order_invalid,
    order_mismatch,
    scale_invalid,
    zero_field,
    field_invalid,
    not_converged,
    tail_check_failed,
    theta_invalid,
    region_invalid,
    sigma_invalid,
    translation_off_grid,
    undefined_ratio,
    config_invalid,
    io_failure,
    internal,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace fracwave
