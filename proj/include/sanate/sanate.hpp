// Copyright 2026 The SANATE Authors
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

#pragma once

#include "sanate/entailment_core.hpp"
#include "sanate/error.hpp"
#include "sanate/json_io.hpp"
#include "sanate/lexical_resources.hpp"
#include "sanate/negation_rules.hpp"
#include "sanate/pipeline.hpp"
#include "sanate/sentiment_polarity.hpp"
#include "sanate/text_normalization.hpp"
