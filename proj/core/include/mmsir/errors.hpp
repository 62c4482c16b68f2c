// SPDX-License-Identifier: Apache-2.0
//
// mmwave-sir: measurement-based mmWave channel model and stochastic-geometry
// SIR coverage analysis for large-scale cellular networks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace mmsir {

/// Invalid input or configuration; carries the offending field name when known.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& message, std::string field = {})
        : std::invalid_argument(field.empty() ? message : field + ": " + message),
          field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// An iterative solver failed to meet its convergence target.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& message) : std::runtime_error(message) {}
};

/// File or stream operation failed.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& message) : std::runtime_error(message) {}
};

} // namespace mmsir
