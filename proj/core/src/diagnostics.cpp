// SPDX-License-Identifier: Apache-2.0

#include "hardness/diagnostics.hpp"

#include <iostream>
#include <mutex>

namespace hardness {

namespace {

std::mutex& handler_mutex()
{
    static std::mutex m;
    return m;
}

WarningHandler& current_handler()
{
    static WarningHandler handler = [](std::string_view msg) { std::cerr << "warning: " << msg << '\n'; };
    return handler;
}

} // namespace

WarningHandler set_warning_handler(WarningHandler handler)
{
    std::lock_guard lock(handler_mutex());
    auto previous = std::move(current_handler());
    current_handler() = std::move(handler);
    return previous;
}

void warn(std::string_view message)
{
    std::lock_guard lock(handler_mutex());
    if (current_handler()) {
        current_handler()(message);
    }
}

ScopedWarningCapture::ScopedWarningCapture()
{
    previous_ = set_warning_handler([this](std::string_view msg) { messages_.emplace_back(msg); });
}

ScopedWarningCapture::~ScopedWarningCapture() { set_warning_handler(std::move(previous_)); }

bool ScopedWarningCapture::contains(std::string_view needle) const
{
    for (const auto& m : messages_) {
        if (m.find(needle) != std::string::npos) {
            return true;
        }
    }
    return false;
}

} // namespace hardness
