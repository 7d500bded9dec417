/*
    Copyright 2026 The rbac-sev Authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbacsev {

/// Base for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownRole : public Error {
public:
    explicit UnknownRole(const std::string& id) : Error("unknown role '" + id + "'") {}
};

class UnknownPermission : public Error {
public:
    explicit UnknownPermission(const std::string& id) : Error("unknown permission '" + id + "'") {}
};

class EmptyGroup : public Error {
public:
    EmptyGroup() : Error("sibling group is empty") {}
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

/// A policy line that is not blank, a comment, or a well-formed directive.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, const std::string& what) : Error(what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace rbacsev
