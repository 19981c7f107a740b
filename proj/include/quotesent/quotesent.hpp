// Copyright 2026 The quotesent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUOTESENT_QUOTESENT_HPP_
#define QUOTESENT_QUOTESENT_HPP_

#include "quotesent/base.hpp"
#include "quotesent/category_filter.hpp"
#include "quotesent/corpus.hpp"
#include "quotesent/eval.hpp"
#include "quotesent/lexicon.hpp"
#include "quotesent/scorer.hpp"
#include "quotesent/textproc.hpp"

#endif  // QUOTESENT_QUOTESENT_HPP_
