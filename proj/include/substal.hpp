/*
 * Copyright 2026 The substal Authors
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

// Everything in one include.

#ifndef SUBSTAL_HPP_
#define SUBSTAL_HPP_

#include "substal/algebra.hpp"
#include "substal/coloring.hpp"
#include "substal/error.hpp"
#include "substal/frames.hpp"
#include "substal/gallery.hpp"
#include "substal/io.hpp"
#include "substal/logic.hpp"
#include "substal/monoid.hpp"
#include "substal/point_set.hpp"
#include "substal/random.hpp"
#include "substal/repr.hpp"
#include "substal/setalg.hpp"
#include "substal/terms.hpp"

#endif  // SUBSTAL_HPP_
