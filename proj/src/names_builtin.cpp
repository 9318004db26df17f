// Copyright 2025 The Promptsan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated from data/first_names.txt and data/last_names.txt; keep in sync.

#include "promptsan/names.hpp"

#include <array>

namespace promptsan::fpe {
namespace {

const std::array<const char*, 1000> kFirstNames = {{
    "Anna", "Anne", "Anno", "Anni", "Annine", "Annina", "Annika", "Annita",
    "Annella", "Annetta", "Annert", "Annard", "Annold", "Annolf", "Annrich", "Annmund",
    "Annfried", "Annhelm", "Annbert", "Anngard", "Annrun", "Annus", "Annan", "Annian",
    "Annio", "Maria", "Marie", "Mario", "Marii", "Mariine", "Mariina", "Mariika",
    "Mariita", "Mariella", "Marietta", "Mariert", "Mariard", "Mariold", "Mariolf", "Maririch",
    "Marimund", "Marifried", "Marihelm", "Maribert", "Marigard", "Marirun", "Marius", "Marian",
    "Mariian", "Mariio", "Kara", "Kare", "Karo", "Kari", "Karine", "Karina",
    "Karika", "Karita", "Karella", "Karetta", "Karert", "Karard", "Karold", "Karolf",
    "Karrich", "Karmund", "Karfried", "Karhelm", "Karbert", "Kargard", "Karrun", "Karus",
    "Karan", "Karian", "Kario", "Johanna", "Johanne", "Johanno", "Johanni", "Johannine",
    "Johannina", "Johannika", "Johannita", "Johannella", "Johannetta", "Johannert", "Johannard", "Johannold",
    "Johannolf", "Johannrich", "Johannmund", "Johannfried", "Johannhelm", "Johannbert", "Johanngard", "Johannrun",
    "Johannus", "Johannan", "Johannian", "Johannio", "Stefa", "Stefe", "Stefo", "Stefi",
    "Stefine", "Stefina", "Stefika", "Stefita", "Stefella", "Stefetta", "Stefert", "Stefard",
    "Stefold", "Stefolf", "Stefrich", "Stefmund", "Steffried", "Stefhelm", "Stefbert", "Stefgard",
    "Stefrun", "Stefus", "Stefan", "Stefian", "Stefio", "Nika", "Nike", "Niko",
    "Niki", "Nikine", "Nikina", "Nikika", "Nikita", "Nikella", "Niketta", "Nikert",
    "Nikard", "Nikold", "Nikolf", "Nikrich", "Nikmund", "Nikfried", "Nikhelm", "Nikbert",
    "Nikgard", "Nikrun", "Nikus", "Nikan", "Nikian", "Nikio", "Alexa", "Alexe",
    "Alexo", "Alexi", "Alexine", "Alexina", "Alexika", "Alexita", "Alexella", "Alexetta",
    "Alexert", "Alexard", "Alexold", "Alexolf", "Alexrich", "Alexmund", "Alexfried", "Alexhelm",
    "Alexbert", "Alexgard", "Alexrun", "Alexus", "Alexan", "Alexian", "Alexio", "Vikta",
    "Vikte", "Vikto", "Vikti", "Viktine", "Viktina", "Viktika", "Viktita", "Viktella",
    "Viktetta", "Viktert", "Viktard", "Viktold", "Viktolf", "Viktrich", "Viktmund", "Viktfried",
    "Vikthelm", "Viktbert", "Viktgard", "Viktrun", "Viktus", "Viktan", "Viktian", "Viktio",
    "Isaba", "Isabe", "Isabo", "Isabi", "Isabine", "Isabina", "Isabika", "Isabita",
    "Isabella", "Isabetta", "Isabert", "Isabard", "Isabold", "Isabolf", "Isabrich", "Isabmund",
    "Isabfried", "Isabhelm", "Isabbert", "Isabgard", "Isabrun", "Isabus", "Isaban", "Isabian",
    "Isabio", "Eleona", "Eleone", "Eleono", "Eleoni", "Eleonine", "Eleonina", "Eleonika",
    "Eleonita", "Eleonella", "Eleonetta", "Eleonert", "Eleonard", "Eleonold", "Eleonolf", "Eleonrich",
    "Eleonmund", "Eleonfried", "Eleonhelm", "Eleonbert", "Eleongard", "Eleonrun", "Eleonus", "Eleonan",
    "Eleonian", "Eleonio", "Frieda", "Friede", "Friedo", "Friedi", "Friedine", "Friedina",
    "Friedika", "Friedita", "Friedella", "Friedetta", "Friedert", "Friedard", "Friedold", "Friedolf",
    "Friedrich", "Friedmund", "Friedfried", "Friedhelm", "Friedbert", "Friedgard", "Friedrun", "Friedus",
    "Friedan", "Friedian", "Friedio", "Greta", "Grete", "Greto", "Greti", "Gretine",
    "Gretina", "Gretika", "Gretita", "Gretella", "Gretetta", "Gretert", "Gretard", "Gretold",
    "Gretolf", "Gretrich", "Gretmund", "Gretfried", "Grethelm", "Gretbert", "Gretgard", "Gretrun",
    "Gretus", "Gretan", "Gretian", "Gretio", "Inga", "Inge", "Ingo", "Ingi",
    "Ingine", "Ingina", "Ingika", "Ingita", "Ingella", "Ingetta", "Ingert", "Ingard",
    "Ingold", "Ingolf", "Ingrich", "Ingmund", "Ingfried", "Inghelm", "Ingbert", "Inggard",
    "Ingrun", "Ingus", "Ingan", "Ingian", "Ingio", "Astra", "Astre", "Astro",
    "Astri", "Astrine", "Astrina", "Astrika", "Astrita", "Astrella", "Astretta", "Astrert",
    "Astrard", "Astrold", "Astrolf", "Astrrich", "Astrmund", "Astrfried", "Astrhelm", "Astrbert",
    "Astrgard", "Astrrun", "Astrus", "Astran", "Astrian", "Astrio", "Siga", "Sige",
    "Sigo", "Sigi", "Sigine", "Sigina", "Sigika", "Sigita", "Sigella", "Sigetta",
    "Sigert", "Sigard", "Sigold", "Sigolf", "Sigrich", "Sigmund", "Sigfried", "Sighelm",
    "Sigbert", "Siggard", "Sigrun", "Sigus", "Sigan", "Sigian", "Sigio", "Hilda",
    "Hilde", "Hildo", "Hildi", "Hildine", "Hildina", "Hildika", "Hildita", "Hildella",
    "Hildetta", "Hildert", "Hildard", "Hildold", "Hildolf", "Hildrich", "Hildmund", "Hildfried",
    "Hildhelm", "Hildbert", "Hildgard", "Hildrun", "Hildus", "Hildan", "Hildian", "Hildio",
    "Leona", "Leone", "Leono", "Leoni", "Leonine", "Leonina", "Leonika", "Leonita",
    "Leonella", "Leonetta", "Leonert", "Leonard", "Leonold", "Leonolf", "Leonrich", "Leonmund",
    "Leonfried", "Leonhelm", "Leonbert", "Leongard", "Leonrun", "Leonus", "Leonan", "Leonian",
    "Leonio", "Luca", "Luce", "Luco", "Luci", "Lucine", "Lucina", "Lucika",
    "Lucita", "Lucella", "Lucetta", "Lucert", "Lucard", "Lucold", "Lucolf", "Lucrich",
    "Lucmund", "Lucfried", "Luchelm", "Lucbert", "Lucgard", "Lucrun", "Lucus", "Lucan",
    "Lucian", "Lucio", "Marta", "Marte", "Marto", "Marti", "Martine", "Martina",
    "Martika", "Martita", "Martella", "Martetta", "Martert", "Martard", "Martold", "Martolf",
    "Martrich", "Martmund", "Martfried", "Marthelm", "Martbert", "Martgard", "Martrun", "Martus",
    "Martan", "Martian", "Martio", "Paula", "Paule", "Paulo", "Pauli", "Pauline",
    "Paulina", "Paulika", "Paulita", "Paulella", "Pauletta", "Paulert", "Paulard", "Paulold",
    "Paulolf", "Paulrich", "Paulmund", "Paulfried", "Paulhelm", "Paulbert", "Paulgard", "Paulrun",
    "Paulus", "Paulan", "Paulian", "Paulio", "Rosa", "Rose", "Roso", "Rosi",
    "Rosine", "Rosina", "Rosika", "Rosita", "Rosella", "Rosetta", "Rosert", "Rosard",
    "Rosold", "Rosolf", "Rosrich", "Rosmund", "Rosfried", "Roshelm", "Rosbert", "Rosgard",
    "Rosrun", "Rosus", "Rosan", "Rosian", "Rosio", "Teresa", "Terese", "Tereso",
    "Teresi", "Teresine", "Teresina", "Teresika", "Teresita", "Teresella", "Teresetta", "Teresert",
    "Teresard", "Teresold", "Teresolf", "Teresrich", "Teresmund", "Teresfried", "Tereshelm", "Teresbert",
    "Teresgard", "Teresrun", "Teresus", "Teresan", "Teresian", "Teresio", "Vera", "Vere",
    "Vero", "Veri", "Verine", "Verina", "Verika", "Verita", "Verella", "Veretta",
    "Verert", "Verard", "Verold", "Verolf", "Verrich", "Vermund", "Verfried", "Verhelm",
    "Verbert", "Vergard", "Verrun", "Verus", "Veran", "Verian", "Verio", "Wilhelma",
    "Wilhelme", "Wilhelmo", "Wilhelmi", "Wilhelmine", "Wilhelmina", "Wilhelmika", "Wilhelmita", "Wilhelmella",
    "Wilhelmetta", "Wilhelmert", "Wilhelmard", "Wilhelmold", "Wilhelmolf", "Wilhelmrich", "Wilhelmmund", "Wilhelmfried",
    "Wilhelmhelm", "Wilhelmbert", "Wilhelmgard", "Wilhelmrun", "Wilhelmus", "Wilhelman", "Wilhelmian", "Wilhelmio",
    "Emila", "Emile", "Emilo", "Emili", "Emiline", "Emilina", "Emilika", "Emilita",
    "Emilella", "Emiletta", "Emilert", "Emilard", "Emilold", "Emilolf", "Emilrich", "Emilmund",
    "Emilfried", "Emilhelm", "Emilbert", "Emilgard", "Emilrun", "Emilus", "Emilan", "Emilian",
    "Emilio", "Otta", "Otte", "Otto", "Otti", "Ottine", "Ottina", "Ottika",
    "Ottita", "Ottella", "Ottetta", "Ottert", "Ottard", "Ottold", "Ottolf", "Ottrich",
    "Ottmund", "Ottfried", "Otthelm", "Ottbert", "Ottgard", "Ottrun", "Ottus", "Ottan",
    "Ottian", "Ottio", "Hanna", "Hanne", "Hanno", "Hanni", "Hannine", "Hannina",
    "Hannika", "Hannita", "Hannella", "Hannetta", "Hannert", "Hannard", "Hannold", "Hannolf",
    "Hannrich", "Hannmund", "Hannfried", "Hannhelm", "Hannbert", "Hanngard", "Hannrun", "Hannus",
    "Hannan", "Hannian", "Hannio", "Julia", "Julie", "Julio", "Julii", "Juliine",
    "Juliina", "Juliika", "Juliita", "Juliella", "Julietta", "Juliert", "Juliard", "Juliold",
    "Juliolf", "Julirich", "Julimund", "Julifried", "Julihelm", "Julibert", "Juligard", "Julirun",
    "Julius", "Julian", "Juliian", "Juliio", "Clara", "Clare", "Claro", "Clari",
    "Clarine", "Clarina", "Clarika", "Clarita", "Clarella", "Claretta", "Clarert", "Clarard",
    "Clarold", "Clarolf", "Clarrich", "Clarmund", "Clarfried", "Clarhelm", "Clarbert", "Clargard",
    "Clarrun", "Clarus", "Claran", "Clarian", "Clario", "Elisa", "Elise", "Eliso",
    "Elisi", "Elisine", "Elisina", "Elisika", "Elisita", "Elisella", "Elisetta", "Elisert",
    "Elisard", "Elisold", "Elisolf", "Elisrich", "Elismund", "Elisfried", "Elishelm", "Elisbert",
    "Elisgard", "Elisrun", "Elisus", "Elisan", "Elisian", "Elisio", "Franca", "France",
    "Franco", "Franci", "Francine", "Francina", "Francika", "Francita", "Francella", "Francetta",
    "Francert", "Francard", "Francold", "Francolf", "Francrich", "Francmund", "Francfried", "Franchelm",
    "Francbert", "Francgard", "Francrun", "Francus", "Francan", "Francian", "Francio", "Gusta",
    "Guste", "Gusto", "Gusti", "Gustine", "Gustina", "Gustika", "Gustita", "Gustella",
    "Gustetta", "Gustert", "Gustard", "Gustold", "Gustolf", "Gustrich", "Gustmund", "Gustfried",
    "Gusthelm", "Gustbert", "Gustgard", "Gustrun", "Gustus", "Gustan", "Gustian", "Gustio",
    "Henra", "Henre", "Henro", "Henri", "Henrine", "Henrina", "Henrika", "Henrita",
    "Henrella", "Henretta", "Henrert", "Henrard", "Henrold", "Henrolf", "Henrrich", "Henrmund",
    "Henrfried", "Henrhelm", "Henrbert", "Henrgard", "Henrrun", "Henrus", "Henran", "Henrian",
    "Henrio", "Ira", "Ire", "Iro", "Iri", "Irine", "Irina", "Irika",
    "Irita", "Irella", "Iretta", "Irert", "Irard", "Irold", "Irolf", "Irrich",
    "Irmund", "Irfried", "Irhelm", "Irbert", "Irgard", "Irrun", "Irus", "Iran",
    "Irian", "Irio", "Josa", "Jose", "Joso", "Josi", "Josine", "Josina",
    "Josika", "Josita", "Josella", "Josetta", "Josert", "Josard", "Josold", "Josolf",
    "Josrich", "Josmund", "Josfried", "Joshelm", "Josbert", "Josgard", "Josrun", "Josus",
    "Josan", "Josian", "Josio", "Lotta", "Lotte", "Lotto", "Lotti", "Lottine",
    "Lottina", "Lottika", "Lottita", "Lottella", "Lottetta", "Lottert", "Lottard", "Lottold",
    "Lottolf", "Lottrich", "Lottmund", "Lottfried", "Lotthelm", "Lottbert", "Lottgard", "Lottrun",
    "Lottus", "Lottan", "Lottian", "Lottio", "Magda", "Magde", "Magdo", "Magdi",
    "Magdine", "Magdina", "Magdika", "Magdita", "Magdella", "Magdetta", "Magdert", "Magdard",
    "Magdold", "Magdolf", "Magdrich", "Magdmund", "Magdfried", "Magdhelm", "Magdbert", "Magdgard",
    "Magdrun", "Magdus", "Magdan", "Magdian", "Magdio", "Nora", "Nore", "Noro",
    "Nori", "Norine", "Norina", "Norika", "Norita", "Norella", "Noretta", "Norert",
    "Norard", "Norold", "Norolf", "Norrich", "Normund", "Norfried", "Norhelm", "Norbert",
    "Norgard", "Norrun", "Norus", "Noran", "Norian", "Norio", "Petra", "Petre",
    "Petro", "Petri", "Petrine", "Petrina", "Petrika", "Petrita", "Petrella", "Petretta",
    "Petrert", "Petrard", "Petrold", "Petrolf", "Petrrich", "Petrmund", "Petrfried", "Petrhelm",
    "Petrbert", "Petrgard", "Petrrun", "Petrus", "Petran", "Petrian", "Petrio", "Ruda",
    "Rude", "Rudo", "Rudi", "Rudine", "Rudina", "Rudika", "Rudita", "Rudella",
    "Rudetta", "Rudert", "Rudard", "Rudold", "Rudolf", "Rudrich", "Rudmund", "Rudfried",
    "Rudhelm", "Rudbert", "Rudgard", "Rudrun", "Rudus", "Rudan", "Rudian", "Rudio",
}};

const std::array<const char*, 1000> kLastNames = {{
    "Andersen", "Andersson", "Anderberg", "Anderstrom", "Anderlund", "Andergren", "Anderqvist", "Anderdahl",
    "Andervik", "Andermann", "Andermeier", "Anderhofer", "Anderbauer", "Anderfeld", "Anderstad", "Andergaard",
    "Anderholt", "Anderness", "Anderrud", "Anderseth", "Anderwald", "Anderbrink", "Anderhorst", "Anderkamp",
    "Anderstedt", "Johansen", "Johansson", "Johanberg", "Johanstrom", "Johanlund", "Johangren", "Johanqvist",
    "Johandahl", "Johanvik", "Johanmann", "Johanmeier", "Johanhofer", "Johanbauer", "Johanfeld", "Johanstad",
    "Johangaard", "Johanholt", "Johanness", "Johanrud", "Johanseth", "Johanwald", "Johanbrink", "Johanhorst",
    "Johankamp", "Johanstedt", "Nielsen", "Nielsson", "Nielberg", "Nielstrom", "Niellund", "Nielgren",
    "Nielqvist", "Nieldahl", "Nielvik", "Nielmann", "Nielmeier", "Nielhofer", "Nielbauer", "Nielfeld",
    "Nielstad", "Nielgaard", "Nielholt", "Nielness", "Nielrud", "Nielseth", "Nielwald", "Nielbrink",
    "Nielhorst", "Nielkamp", "Nielstedt", "Pedersen", "Pedersson", "Pederberg", "Pederstrom", "Pederlund",
    "Pedergren", "Pederqvist", "Pederdahl", "Pedervik", "Pedermann", "Pedermeier", "Pederhofer", "Pederbauer",
    "Pederfeld", "Pederstad", "Pedergaard", "Pederholt", "Pederness", "Pederrud", "Pederseth", "Pederwald",
    "Pederbrink", "Pederhorst", "Pederkamp", "Pederstedt", "Eriksen", "Eriksson", "Erikberg", "Erikstrom",
    "Eriklund", "Erikgren", "Erikqvist", "Erikdahl", "Erikvik", "Erikmann", "Erikmeier", "Erikhofer",
    "Erikbauer", "Erikfeld", "Erikstad", "Erikgaard", "Erikholt", "Erikness", "Erikrud", "Erikseth",
    "Erikwald", "Erikbrink", "Erikhorst", "Erikkamp", "Erikstedt", "Karlsen", "Karlsson", "Karlberg",
    "Karlstrom", "Karllund", "Karlgren", "Karlqvist", "Karldahl", "Karlvik", "Karlmann", "Karlmeier",
    "Karlhofer", "Karlbauer", "Karlfeld", "Karlstad", "Karlgaard", "Karlholt", "Karlness", "Karlrud",
    "Karlseth", "Karlwald", "Karlbrink", "Karlhorst", "Karlkamp", "Karlstedt", "Larsen", "Larsson",
    "Larberg", "Larstrom", "Larlund", "Largren", "Larqvist", "Lardahl", "Larvik", "Larmann",
    "Larmeier", "Larhofer", "Larbauer", "Larfeld", "Larstad", "Largaard", "Larholt", "Larness",
    "Larrud", "Larseth", "Larwald", "Larbrink", "Larhorst", "Larkamp", "Larstedt", "Olofsen",
    "Olofsson", "Olofberg", "Olofstrom", "Oloflund", "Olofgren", "Olofqvist", "Olofdahl", "Olofvik",
    "Olofmann", "Olofmeier", "Olofhofer", "Olofbauer", "Oloffeld", "Olofstad", "Olofgaard", "Olofholt",
    "Olofness", "Olofrud", "Olofseth", "Olofwald", "Olofbrink", "Olofhorst", "Olofkamp", "Olofstedt",
    "Svendsen", "Svendsson", "Svendberg", "Svendstrom", "Svendlund", "Svendgren", "Svendqvist", "Svenddahl",
    "Svendvik", "Svendmann", "Svendmeier", "Svendhofer", "Svendbauer", "Svendfeld", "Svendstad", "Svendgaard",
    "Svendholt", "Svendness", "Svendrud", "Svendseth", "Svendwald", "Svendbrink", "Svendhorst", "Svendkamp",
    "Svendstedt", "Magnussen", "Magnussson", "Magnusberg", "Magnusstrom", "Magnuslund", "Magnusgren", "Magnusqvist",
    "Magnusdahl", "Magnusvik", "Magnusmann", "Magnusmeier", "Magnushofer", "Magnusbauer", "Magnusfeld", "Magnusstad",
    "Magnusgaard", "Magnusholt", "Magnusness", "Magnusrud", "Magnusseth", "Magnuswald", "Magnusbrink", "Magnushorst",
    "Magnuskamp", "Magnusstedt", "Bergsen", "Bergsson", "Bergberg", "Bergstrom", "Berglund", "Berggren",
    "Bergqvist", "Bergdahl", "Bergvik", "Bergmann", "Bergmeier", "Berghofer", "Bergbauer", "Bergfeld",
    "Bergstad", "Berggaard", "Bergholt", "Bergness", "Bergrud", "Bergseth", "Bergwald", "Bergbrink",
    "Berghorst", "Bergkamp", "Bergstedt", "Lindsen", "Lindsson", "Lindberg", "Lindstrom", "Lindlund",
    "Lindgren", "Lindqvist", "Linddahl", "Lindvik", "Lindmann", "Lindmeier", "Lindhofer", "Lindbauer",
    "Lindfeld", "Lindstad", "Lindgaard", "Lindholt", "Lindness", "Lindrud", "Lindseth", "Lindwald",
    "Lindbrink", "Lindhorst", "Lindkamp", "Lindstedt", "Holmsen", "Holmsson", "Holmberg", "Holmstrom",
    "Holmlund", "Holmgren", "Holmqvist", "Holmdahl", "Holmvik", "Holmmann", "Holmmeier", "Holmhofer",
    "Holmbauer", "Holmfeld", "Holmstad", "Holmgaard", "Holmholt", "Holmness", "Holmrud", "Holmseth",
    "Holmwald", "Holmbrink", "Holmhorst", "Holmkamp", "Holmstedt", "Strandsen", "Strandsson", "Strandberg",
    "Strandstrom", "Strandlund", "Strandgren", "Strandqvist", "Stranddahl", "Strandvik", "Strandmann", "Strandmeier",
    "Strandhofer", "Strandbauer", "Strandfeld", "Strandstad", "Strandgaard", "Strandholt", "Strandness", "Strandrud",
    "Strandseth", "Strandwald", "Strandbrink", "Strandhorst", "Strandkamp", "Strandstedt", "Dahlsen", "Dahlsson",
    "Dahlberg", "Dahlstrom", "Dahllund", "Dahlgren", "Dahlqvist", "Dahldahl", "Dahlvik", "Dahlmann",
    "Dahlmeier", "Dahlhofer", "Dahlbauer", "Dahlfeld", "Dahlstad", "Dahlgaard", "Dahlholt", "Dahlness",
    "Dahlrud", "Dahlseth", "Dahlwald", "Dahlbrink", "Dahlhorst", "Dahlkamp", "Dahlstedt", "Bjorksen",
    "Bjorksson", "Bjorkberg", "Bjorkstrom", "Bjorklund", "Bjorkgren", "Bjorkqvist", "Bjorkdahl", "Bjorkvik",
    "Bjorkmann", "Bjorkmeier", "Bjorkhofer", "Bjorkbauer", "Bjorkfeld", "Bjorkstad", "Bjorkgaard", "Bjorkholt",
    "Bjorkness", "Bjorkrud", "Bjorkseth", "Bjorkwald", "Bjorkbrink", "Bjorkhorst", "Bjorkkamp", "Bjorkstedt",
    "Nordsen", "Nordsson", "Nordberg", "Nordstrom", "Nordlund", "Nordgren", "Nordqvist", "Norddahl",
    "Nordvik", "Nordmann", "Nordmeier", "Nordhofer", "Nordbauer", "Nordfeld", "Nordstad", "Nordgaard",
    "Nordholt", "Nordness", "Nordrud", "Nordseth", "Nordwald", "Nordbrink", "Nordhorst", "Nordkamp",
    "Nordstedt", "Sodersen", "Sodersson", "Soderberg", "Soderstrom", "Soderlund", "Sodergren", "Soderqvist",
    "Soderdahl", "Sodervik", "Sodermann", "Sodermeier", "Soderhofer", "Soderbauer", "Soderfeld", "Soderstad",
    "Sodergaard", "Soderholt", "Soderness", "Soderrud", "Soderseth", "Soderwald", "Soderbrink", "Soderhorst",
    "Soderkamp", "Soderstedt", "Steinsen", "Steinsson", "Steinberg", "Steinstrom", "Steinlund", "Steingren",
    "Steinqvist", "Steindahl", "Steinvik", "Steinmann", "Steinmeier", "Steinhofer", "Steinbauer", "Steinfeld",
    "Steinstad", "Steingaard", "Steinholt", "Steinness", "Steinrud", "Steinseth", "Steinwald", "Steinbrink",
    "Steinhorst", "Steinkamp", "Steinstedt", "Waldsen", "Waldsson", "Waldberg", "Waldstrom", "Waldlund",
    "Waldgren", "Waldqvist", "Walddahl", "Waldvik", "Waldmann", "Waldmeier", "Waldhofer", "Waldbauer",
    "Waldfeld", "Waldstad", "Waldgaard", "Waldholt", "Waldness", "Waldrud", "Waldseth", "Waldwald",
    "Waldbrink", "Waldhorst", "Waldkamp", "Waldstedt", "Bachsen", "Bachsson", "Bachberg", "Bachstrom",
    "Bachlund", "Bachgren", "Bachqvist", "Bachdahl", "Bachvik", "Bachmann", "Bachmeier", "Bachhofer",
    "Bachbauer", "Bachfeld", "Bachstad", "Bachgaard", "Bachholt", "Bachness", "Bachrud", "Bachseth",
    "Bachwald", "Bachbrink", "Bachhorst", "Bachkamp", "Bachstedt", "Brunsen", "Brunsson", "Brunberg",
    "Brunstrom", "Brunlund", "Brungren", "Brunqvist", "Brundahl", "Brunvik", "Brunmann", "Brunmeier",
    "Brunhofer", "Brunbauer", "Brunfeld", "Brunstad", "Brungaard", "Brunholt", "Brunness", "Brunrud",
    "Brunseth", "Brunwald", "Brunbrink", "Brunhorst", "Brunkamp", "Brunstedt", "Feldsen", "Feldsson",
    "Feldberg", "Feldstrom", "Feldlund", "Feldgren", "Feldqvist", "Felddahl", "Feldvik", "Feldmann",
    "Feldmeier", "Feldhofer", "Feldbauer", "Feldfeld", "Feldstad", "Feldgaard", "Feldholt", "Feldness",
    "Feldrud", "Feldseth", "Feldwald", "Feldbrink", "Feldhorst", "Feldkamp", "Feldstedt", "Gruensen",
    "Gruensson", "Gruenberg", "Gruenstrom", "Gruenlund", "Gruengren", "Gruenqvist", "Gruendahl", "Gruenvik",
    "Gruenmann", "Gruenmeier", "Gruenhofer", "Gruenbauer", "Gruenfeld", "Gruenstad", "Gruengaard", "Gruenholt",
    "Gruenness", "Gruenrud", "Gruenseth", "Gruenwald", "Gruenbrink", "Gruenhorst", "Gruenkamp", "Gruenstedt",
    "Hofsen", "Hofsson", "Hofberg", "Hofstrom", "Hoflund", "Hofgren", "Hofqvist", "Hofdahl",
    "Hofvik", "Hofmann", "Hofmeier", "Hofhofer", "Hofbauer", "Hoffeld", "Hofstad", "Hofgaard",
    "Hofholt", "Hofness", "Hofrud", "Hofseth", "Hofwald", "Hofbrink", "Hofhorst", "Hofkamp",
    "Hofstedt", "Kaufsen", "Kaufsson", "Kaufberg", "Kaufstrom", "Kauflund", "Kaufgren", "Kaufqvist",
    "Kaufdahl", "Kaufvik", "Kaufmann", "Kaufmeier", "Kaufhofer", "Kaufbauer", "Kauffeld", "Kaufstad",
    "Kaufgaard", "Kaufholt", "Kaufness", "Kaufrud", "Kaufseth", "Kaufwald", "Kaufbrink", "Kaufhorst",
    "Kaufkamp", "Kaufstedt", "Langsen", "Langsson", "Langberg", "Langstrom", "Langlund", "Langgren",
    "Langqvist", "Langdahl", "Langvik", "Langmann", "Langmeier", "Langhofer", "Langbauer", "Langfeld",
    "Langstad", "Langgaard", "Langholt", "Langness", "Langrud", "Langseth", "Langwald", "Langbrink",
    "Langhorst", "Langkamp", "Langstedt", "Mohrsen", "Mohrsson", "Mohrberg", "Mohrstrom", "Mohrlund",
    "Mohrgren", "Mohrqvist", "Mohrdahl", "Mohrvik", "Mohrmann", "Mohrmeier", "Mohrhofer", "Mohrbauer",
    "Mohrfeld", "Mohrstad", "Mohrgaard", "Mohrholt", "Mohrness", "Mohrrud", "Mohrseth", "Mohrwald",
    "Mohrbrink", "Mohrhorst", "Mohrkamp", "Mohrstedt", "Neusen", "Neusson", "Neuberg", "Neustrom",
    "Neulund", "Neugren", "Neuqvist", "Neudahl", "Neuvik", "Neumann", "Neumeier", "Neuhofer",
    "Neubauer", "Neufeld", "Neustad", "Neugaard", "Neuholt", "Neuness", "Neurud", "Neuseth",
    "Neuwald", "Neubrink", "Neuhorst", "Neukamp", "Neustedt", "Ostsen", "Ostsson", "Ostberg",
    "Oststrom", "Ostlund", "Ostgren", "Ostqvist", "Ostdahl", "Ostvik", "Ostmann", "Ostmeier",
    "Osthofer", "Ostbauer", "Ostfeld", "Oststad", "Ostgaard", "Ostholt", "Ostness", "Ostrud",
    "Ostseth", "Ostwald", "Ostbrink", "Osthorst", "Ostkamp", "Oststedt", "Riedsen", "Riedsson",
    "Riedberg", "Riedstrom", "Riedlund", "Riedgren", "Riedqvist", "Rieddahl", "Riedvik", "Riedmann",
    "Riedmeier", "Riedhofer", "Riedbauer", "Riedfeld", "Riedstad", "Riedgaard", "Riedholt", "Riedness",
    "Riedrud", "Riedseth", "Riedwald", "Riedbrink", "Riedhorst", "Riedkamp", "Riedstedt", "Schwarzsen",
    "Schwarzsson", "Schwarzberg", "Schwarzstrom", "Schwarzlund", "Schwarzgren", "Schwarzqvist", "Schwarzdahl", "Schwarzvik",
    "Schwarzmann", "Schwarzmeier", "Schwarzhofer", "Schwarzbauer", "Schwarzfeld", "Schwarzstad", "Schwarzgaard", "Schwarzholt",
    "Schwarzness", "Schwarzrud", "Schwarzseth", "Schwarzwald", "Schwarzbrink", "Schwarzhorst", "Schwarzkamp", "Schwarzstedt",
    "Tannsen", "Tannsson", "Tannberg", "Tannstrom", "Tannlund", "Tanngren", "Tannqvist", "Tanndahl",
    "Tannvik", "Tannmann", "Tannmeier", "Tannhofer", "Tannbauer", "Tannfeld", "Tannstad", "Tanngaard",
    "Tannholt", "Tannness", "Tannrud", "Tannseth", "Tannwald", "Tannbrink", "Tannhorst", "Tannkamp",
    "Tannstedt", "Ulmsen", "Ulmsson", "Ulmberg", "Ulmstrom", "Ulmlund", "Ulmgren", "Ulmqvist",
    "Ulmdahl", "Ulmvik", "Ulmmann", "Ulmmeier", "Ulmhofer", "Ulmbauer", "Ulmfeld", "Ulmstad",
    "Ulmgaard", "Ulmholt", "Ulmness", "Ulmrud", "Ulmseth", "Ulmwald", "Ulmbrink", "Ulmhorst",
    "Ulmkamp", "Ulmstedt", "Vogelsen", "Vogelsson", "Vogelberg", "Vogelstrom", "Vogellund", "Vogelgren",
    "Vogelqvist", "Vogeldahl", "Vogelvik", "Vogelmann", "Vogelmeier", "Vogelhofer", "Vogelbauer", "Vogelfeld",
    "Vogelstad", "Vogelgaard", "Vogelholt", "Vogelness", "Vogelrud", "Vogelseth", "Vogelwald", "Vogelbrink",
    "Vogelhorst", "Vogelkamp", "Vogelstedt", "Webersen", "Webersson", "Weberberg", "Weberstrom", "Weberlund",
    "Webergren", "Weberqvist", "Weberdahl", "Webervik", "Webermann", "Webermeier", "Weberhofer", "Weberbauer",
    "Weberfeld", "Weberstad", "Webergaard", "Weberholt", "Weberness", "Weberrud", "Weberseth", "Weberwald",
    "Weberbrink", "Weberhorst", "Weberkamp", "Weberstedt", "Zimmersen", "Zimmersson", "Zimmerberg", "Zimmerstrom",
    "Zimmerlund", "Zimmergren", "Zimmerqvist", "Zimmerdahl", "Zimmervik", "Zimmermann", "Zimmermeier", "Zimmerhofer",
    "Zimmerbauer", "Zimmerfeld", "Zimmerstad", "Zimmergaard", "Zimmerholt", "Zimmerness", "Zimmerrud", "Zimmerseth",
    "Zimmerwald", "Zimmerbrink", "Zimmerhorst", "Zimmerkamp", "Zimmerstedt", "Falksen", "Falksson", "Falkberg",
    "Falkstrom", "Falklund", "Falkgren", "Falkqvist", "Falkdahl", "Falkvik", "Falkmann", "Falkmeier",
    "Falkhofer", "Falkbauer", "Falkfeld", "Falkstad", "Falkgaard", "Falkholt", "Falkness", "Falkrud",
    "Falkseth", "Falkwald", "Falkbrink", "Falkhorst", "Falkkamp", "Falkstedt", "Grimsen", "Grimsson",
    "Grimberg", "Grimstrom", "Grimlund", "Grimgren", "Grimqvist", "Grimdahl", "Grimvik", "Grimmann",
    "Grimmeier", "Grimhofer", "Grimbauer", "Grimfeld", "Grimstad", "Grimgaard", "Grimholt", "Grimness",
    "Grimrud", "Grimseth", "Grimwald", "Grimbrink", "Grimhorst", "Grimkamp", "Grimstedt", "Hartsen",
    "Hartsson", "Hartberg", "Hartstrom", "Hartlund", "Hartgren", "Hartqvist", "Hartdahl", "Hartvik",
    "Hartmann", "Hartmeier", "Harthofer", "Hartbauer", "Hartfeld", "Hartstad", "Hartgaard", "Hartholt",
    "Hartness", "Hartrud", "Hartseth", "Hartwald", "Hartbrink", "Harthorst", "Hartkamp", "Hartstedt",
}};

}  // namespace

std::vector<std::string> BuiltinFirstNames() {
  return {kFirstNames.begin(), kFirstNames.end()};
}

std::vector<std::string> BuiltinLastNames() {
  return {kLastNames.begin(), kLastNames.end()};
}

}  // namespace promptsan::fpe
