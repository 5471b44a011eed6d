/*
Copyright 2026 The plankforge Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace plankforge {

// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input (dimension mismatch, bad parameter).
class InputError : public Error {
 public:
  using Error::Error;
};

// The supplied slab/sample sequence ran out before a construction closed.
class ExhaustedError : public Error {
 public:
  ExhaustedError(const std::string& what, std::size_t achieved,
                 std::size_t required, double deficit)
      : Error(what), achieved_(achieved), required_(required),
        deficit_(deficit) {}

  // Units depend on the thrower: balls covered, blocks closed, slabs placed.
  std::size_t achieved() const { return achieved_; }
  std::size_t required() const { return required_; }
  // Missing mass in the thrower's natural measure (width sum, sum of 1/x^d).
  double deficit() const { return deficit_; }

 private:
  std::size_t achieved_;
  std::size_t required_;
  double deficit_;
};

// A step certificate failed (e.g. normals not ordered along the moment curve).
class CertificateError : public Error {
 public:
  using Error::Error;
};

// Sampled verification of a claimed covering found uncovered points.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what,
                    std::vector<Eigen::VectorXd> witnesses)
      : Error(what), witnesses_(std::move(witnesses)) {}

  const std::vector<Eigen::VectorXd>& witnesses() const { return witnesses_; }

 private:
  std::vector<Eigen::VectorXd> witnesses_;
};

}  // namespace plankforge
