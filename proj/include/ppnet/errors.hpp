/**
 * \file ppnet/errors.hpp
 *
 * \brief Exception types shared across the ppnet library.
 *
 * <hr/>
 *
 * Copyright 2026 The ppnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PPNET_ERRORS_HPP
#define PPNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ppnet {

/// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error
{
public:
    explicit domain_error(const std::string& what)
    : std::domain_error(what)
    {
    }
};

/// An iterative evaluation failed to reach its tolerance within its term cap.
class non_convergent_error : public std::runtime_error
{
public:
    explicit non_convergent_error(const std::string& what)
    : std::runtime_error(what)
    {
    }
};

/// No sign change of a stationary gap was found after bracket expansion;
/// signals inconsistent optimization parameters.
class bracket_failure_error : public std::runtime_error
{
public:
    explicit bracket_failure_error(const std::string& what)
    : std::runtime_error(what)
    {
    }
};

/// Network power consumption is identically zero, so energy efficiency
/// is undefined.
class degenerate_network_error : public std::runtime_error
{
public:
    explicit degenerate_network_error(const std::string& what)
    : std::runtime_error(what)
    {
    }
};

/// Malformed experiment configuration (field-level message).
class config_error : public std::runtime_error
{
public:
    explicit config_error(const std::string& what)
    : std::runtime_error(what)
    {
    }
};

/// A Monte Carlo campaign could not produce a usable realization
/// (e.g. the empty-realization resample cap was exhausted).
class simulation_error : public std::runtime_error
{
public:
    explicit simulation_error(const std::string& what)
    : std::runtime_error(what)
    {
    }
};

} // namespace ppnet

#endif // PPNET_ERRORS_HPP
