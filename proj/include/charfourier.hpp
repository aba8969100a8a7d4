// Copyright 2026 The charfourier Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "charfourier/circle.hpp"
#include "charfourier/grid.hpp"
#include "charfourier/samples.hpp"
#include "charfourier/fft.hpp"
#include "charfourier/fourier.hpp"
#include "charfourier/char_id.hpp"
#include "charfourier/finite_oracle.hpp"
