// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

#![no_main]

use balanced_intervals::formats::{instance_to_json, parse_instance};
use balanced_intervals::interval::is_balanced;
use balanced_intervals::k_color::k_color;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(inst) = parse_instance(text, 2) else {
        return;
    };
    assert_eq!(parse_instance(&instance_to_json(&inst), 2).unwrap(), inst);
    // small instances also go through the colorer
    if inst.len() <= 64 && inst.k() <= 16 {
        let coloring = k_color(&inst).unwrap();
        assert!(is_balanced(&inst, &coloring).unwrap());
    }
});
