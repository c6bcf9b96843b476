#pragma once

#include <stdexcept>
#include <string>

namespace regov {

// Stable error codes shared by the C++ core and the C API.
enum class Err : int {
    ok = 0,
    invalid_arg,
    parse,
    malformed_metafile,
    non_positive_duration,
    zero_access_count,
    unknown_domain_code,
    unknown_region_code,
    bad_signature,
    bad_nonce,
    unknown_address,
    unknown_kind,
    unknown_function,
    reverted,
    unknown_id,
    already_stored,
    unknown_app,
    unknown_resource,
    unknown_session,
    unexpected_responder,
    duplicate_response,
    session_closed,
    session_not_finished,
    storage_exists,
    duplicate_path,
    invalid_policy,
    not_owned_here,
    enclave_unavailable,
    provider_unavailable,
    integrity,
    io,
    assertion_failed,
    internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
    throw Error(code, message);
}

} // namespace regov
