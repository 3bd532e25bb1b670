#include "gbmst/errors.hpp"

#include <cstdio>

namespace gbmst {

namespace {

void default_warning_handler(const std::string& message) {
    std::fprintf(stderr, "warning: %s\n", message.c_str());
}

WarningHandler g_handler = &default_warning_handler;

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
    WarningHandler previous = g_handler;
    g_handler = handler ? handler : &default_warning_handler;
    return previous;
}

void warn(const std::string& message) { g_handler(message); }

}  // namespace gbmst
