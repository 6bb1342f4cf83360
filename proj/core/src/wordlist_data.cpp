#include "wordlist_data.hpp"

// Frequency-ranked common English vocabulary (~10k entries) plus a small
// software-vocabulary supplement. Lowercase, one word per line, sorted.
// Used only to validate suffix-stripping candidates; see wordpipe.cpp.

namespace softcloud::detail {

const std::string_view embedded_word_list =
    "a\naa\naaa\naaron\nab\nabandoned\nabc\naberdeen\nabilities\nability\nable\naboriginal\n"
    "abortion\nabout\nabove\nabraham\nabroad\nabs\nabsence\nabsent\nabsolute\nabsolutely\nabsorption\nabstract\n"
    "abstracts\nabu\nabuse\nac\nacademic\nacademics\nacademy\nacc\naccent\naccept\nacceptable\nacceptance\n"
    "accepted\naccepting\naccepts\naccess\naccessed\naccessibility\naccessible\naccessing\naccessories\naccessory\naccident\naccidents\n"
    "accommodate\naccommodation\naccommodations\naccompanied\naccompanying\naccomplish\naccomplished\naccordance\naccording\naccordingly\naccount\naccountability\n"
    "accounting\naccounts\naccreditation\naccredited\naccuracy\naccurate\naccurately\naccused\nacdbentity\nace\nacer\nachieve\n"
    "achieved\nachievement\nachievements\nachieving\nacid\nacids\nacknowledge\nacknowledged\nacm\nacne\nacoustic\nacquire\n"
    "acquired\nacquisition\nacquisitions\nacre\nacres\nacrobat\nacross\nacrylic\nact\nacting\naction\nactions\n"
    "activated\nactivation\nactive\nactively\nactivists\nactivities\nactivity\nactor\nactors\nactress\nacts\nactual\n"
    "actually\nacute\nad\nada\nadam\nadams\nadaptation\nadapted\nadapter\nadapters\nadaptive\nadaptor\n"
    "add\nadded\naddiction\nadding\naddition\nadditional\nadditionally\nadditions\naddress\naddressed\naddresses\naddressing\n"
    "adds\nadelaide\nadequate\nadidas\nadipex\nadjacent\nadjust\nadjustable\nadjusted\nadjustment\nadjustments\nadmin\n"
    "administered\nadministration\nadministrative\nadministrator\nadministrators\nadmission\nadmissions\nadmit\nadmitted\nadobe\nadolescent\nadopt\n"
    "adopted\nadoption\nadrian\nads\nadsl\nadult\nadults\nadvance\nadvanced\nadvancement\nadvances\nadvantage\n"
    "advantages\nadventure\nadventures\nadverse\nadvert\nadvertise\nadvertisement\nadvertisements\nadvertiser\nadvertisers\nadvertising\nadvice\n"
    "advise\nadvised\nadvisor\nadvisors\nadvisory\nadvocacy\nadvocate\nadware\nae\naerial\naerospace\naf\n"
    "affair\naffairs\naffect\naffected\naffecting\naffects\naffiliate\naffiliated\naffiliates\naffiliation\nafford\naffordable\n"
    "afghanistan\nafraid\nafrica\nafrican\nafter\nafternoon\nafterwards\nag\nagain\nagainst\nage\naged\n"
    "agencies\nagency\nagenda\nagent\nagents\nages\naggregate\naggressive\naging\nago\nagree\nagreed\n"
    "agreement\nagreements\nagrees\nagricultural\nagriculture\nah\nahead\nai\naid\naids\naim\naimed\n"
    "aims\nair\naircraft\nairfare\nairline\nairlines\nairplane\nairport\nairports\naj\nak\naka\n"
    "al\nala\nalabama\nalan\nalarm\nalaska\nalbania\nalbany\nalbert\nalberta\nalbum\nalbums\n"
    "albuquerque\nalcohol\nalert\nalerts\nalex\nalexander\nalexandria\nalfred\nalgebra\nalgeria\nalgorithm\nalgorithms\n"
    "ali\nalias\nalice\nalien\nalign\nalignment\nalike\nalive\nall\nallah\nallan\nalleged\n"
    "allen\nallergy\nalliance\nallied\nallocated\nallocation\nallow\nallowance\nallowed\nallowing\nallows\nalloy\n"
    "almost\nalone\nalong\nalot\nalpha\nalphabetical\nalpine\nalready\nalso\nalt\nalter\naltered\n"
    "alternate\nalternative\nalternatively\nalternatives\nalthough\nalto\naluminium\naluminum\nalumni\nalways\nam\namanda\n"
    "amateur\namazing\namazon\nambassador\namber\nambien\nambient\namd\namend\namended\namendment\namendments\n"
    "amenities\namerica\namerican\namericans\namericas\namino\namong\namongst\namount\namounts\namp\nampland\n"
    "amplifier\namsterdam\namy\nan\nana\nanaheim\nanal\nanalog\nanalyses\nanalysis\nanalyst\nanalysts\n"
    "analytical\nanalyze\nanalyzed\nanatomy\nanchor\nancient\nand\nandale\nanderson\nandorra\nandrea\nandreas\n"
    "andrew\nandrews\nandy\nangel\nangela\nangeles\nangels\nanger\nangle\nangola\nangry\nanimal\n"
    "animals\nanimated\nanimation\nanime\nann\nanna\nanne\nannex\nannie\nanniversary\nannotated\nannotation\n"
    "announce\nannounced\nannouncement\nannouncements\nannounces\nannoying\nannual\nannually\nanonymous\nanother\nanswer\nanswered\n"
    "answering\nanswers\nant\nantarctica\nantenna\nanthony\nanthropology\nanti\nantibodies\nantibody\nanticipated\nantigua\n"
    "antique\nantiques\nantivirus\nantonio\nanxiety\nany\nanybody\nanymore\nanyone\nanything\nanytime\nanyway\n"
    "anywhere\naol\nap\napache\napart\napartment\napartments\napi\napnic\napollo\napp\napparatus\n"
    "apparel\napparent\napparently\nappeal\nappeals\nappear\nappearance\nappeared\nappearing\nappears\nappend\nappendix\n"
    "apple\nappliance\nappliances\napplicable\napplicant\napplicants\napplication\napplications\napplied\napplies\napply\napplying\n"
    "appointed\nappointment\nappointments\nappraisal\nappreciate\nappreciated\nappreciation\napproach\napproaches\nappropriate\nappropriations\napproval\n"
    "approve\napproved\napprox\napproximate\napproximately\napps\napr\napril\napt\naqua\naquarium\naquatic\n"
    "ar\narab\narabia\narabic\narbitrary\narbitration\narbor\narc\narcade\narch\narchitect\narchitects\n"
    "architectural\narchitecture\narchive\narchived\narchives\narctic\nare\narea\nareas\narena\narg\nargentina\n"
    "argue\nargued\nargument\narguments\narise\narising\narizona\narkansas\narlington\narm\narmed\narmenia\n"
    "armor\narms\narmstrong\narmy\narnold\naround\narrange\narranged\narrangement\narrangements\narray\narrest\n"
    "arrested\narrival\narrivals\narrive\narrived\narrives\narrow\nart\narthritis\narthur\narticle\narticles\n"
    "artifact\nartificial\nartist\nartistic\nartists\narts\nartwork\naruba\nas\nasbestos\nascii\nash\n"
    "ashley\nasia\nasian\naside\nasin\nask\nasked\nasking\nasks\nasn\nasp\naspect\n"
    "aspects\nass\nassault\nassembled\nassembly\nassess\nassessed\nassessing\nassessment\nassessments\nasset\nassets\n"
    "assign\nassigned\nassignment\nassignments\nassist\nassistance\nassistant\nassisted\nassists\nassociate\nassociated\nassociates\n"
    "association\nassociations\nassume\nassumed\nassumes\nassuming\nassumption\nassumptions\nassurance\nassure\nassured\nasthma\n"
    "astrology\nastronomy\nasus\nasylum\nat\nata\nate\nathens\nathletes\nathletic\nathletics\nati\n"
    "atlanta\natlantic\natlas\natm\natmosphere\natmospheric\natom\natomic\nattach\nattached\nattachment\nattachments\n"
    "attack\nattacked\nattacks\nattempt\nattempted\nattempting\nattempts\nattend\nattendance\nattended\nattending\nattention\n"
    "attitude\nattitudes\nattorney\nattorneys\nattract\nattraction\nattractions\nattractive\nattribute\nattributes\nau\nauburn\n"
    "auckland\nauction\nauctions\naud\naudi\naudience\naudio\naudit\nauditor\naug\naugust\naurora\n"
    "aus\naustin\naustralia\naustralian\naustria\nauthentic\nauthentication\nauthor\nauthorities\nauthority\nauthorization\nauthorized\n"
    "authors\nauto\nautomated\nautomatic\nautomatically\nautomation\nautomobile\nautomobiles\nautomotive\nautos\nautumn\nav\n"
    "availability\navailable\navatar\nave\navenue\naverage\navg\navi\naviation\navoid\navoiding\navon\n"
    "aw\naward\nawarded\nawards\naware\nawareness\naway\nawesome\nawful\naxis\naye\naz\n"
    "azerbaijan\nb\nba\nbabe\nbabes\nbabies\nbaby\nbachelor\nback\nbacked\nbackground\nbackgrounds\n"
    "backing\nbackup\nbacon\nbacteria\nbacterial\nbad\nbadge\nbadly\nbag\nbaghdad\nbags\nbahamas\n"
    "bahrain\nbailey\nbaker\nbaking\nbalance\nbalanced\nbald\nbali\nball\nballet\nballoon\nballot\n"
    "balls\nbaltimore\nban\nbanana\nband\nbands\nbandwidth\nbang\nbangbus\nbangkok\nbangladesh\nbank\n"
    "banking\nbankruptcy\nbanks\nbanned\nbanner\nbanners\nbaptist\nbar\nbarbados\nbarbara\nbarbie\nbarcelona\n"
    "bare\nbarely\nbargain\nbargains\nbarn\nbarnes\nbarrel\nbarrier\nbarriers\nbarry\nbars\nbase\n"
    "baseball\nbased\nbaseline\nbasement\nbasename\nbases\nbasic\nbasically\nbasics\nbasin\nbasis\nbasket\n"
    "basketball\nbaskets\nbass\nbat\nbatch\nbath\nbathroom\nbathrooms\nbaths\nbatman\nbatteries\nbattery\n"
    "battle\nbattlefield\nbay\nbb\nbbc\nbbs\nbbw\nbc\nbd\nbdsm\nbe\nbeach\n"
    "beaches\nbeads\nbeam\nbean\nbeans\nbear\nbearing\nbears\nbeast\nbeastality\nbeastiality\nbeat\n"
    "beatles\nbeats\nbeautiful\nbeautifully\nbeauty\nbeaver\nbecame\nbecause\nbecome\nbecomes\nbecoming\nbed\n"
    "bedding\nbedford\nbedroom\nbedrooms\nbeds\nbee\nbeef\nbeen\nbeer\nbefore\nbegan\nbegin\n"
    "beginner\nbeginners\nbeginning\nbegins\nbegun\nbehalf\nbehavior\nbehavioral\nbehaviour\nbehind\nbeijing\nbeing\n"
    "beings\nbelarus\nbelfast\nbelgium\nbelief\nbeliefs\nbelieve\nbelieved\nbelieves\nbelize\nbelkin\nbell\n"
    "belle\nbelly\nbelong\nbelongs\nbelow\nbelt\nbelts\nben\nbench\nbenchmark\nbend\nbeneath\n"
    "beneficial\nbenefit\nbenefits\nbenjamin\nbennett\nbent\nbenz\nberkeley\nberlin\nbermuda\nbernard\nberry\n"
    "beside\nbesides\nbest\nbestiality\nbestsellers\nbet\nbeta\nbeth\nbetter\nbetting\nbetty\nbetween\n"
    "beverage\nbeverages\nbeverly\nbeyond\nbg\nbhutan\nbi\nbias\nbible\nbiblical\nbibliographic\nbibliography\n"
    "bicycle\nbid\nbidder\nbidding\nbids\nbig\nbigger\nbiggest\nbike\nbikes\nbikini\nbill\n"
    "billing\nbillion\nbills\nbilly\nbin\nbinary\nbind\nbinding\nbingo\nbio\nbiodiversity\nbiographies\n"
    "biography\nbiol\nbiological\nbiology\nbios\nbiotechnology\nbird\nbirds\nbirmingham\nbirth\nbirthday\nbishop\n"
    "bit\nbitch\nbite\nbits\nbiz\nbizarre\nbizrate\nbk\nbl\nblack\nblackberry\nblackjack\n"
    "blacks\nblade\nblades\nblah\nblair\nblake\nblame\nblank\nblanket\nblast\nbleeding\nblend\n"
    "bless\nblessed\nblind\nblink\nblock\nblocked\nblocking\nblocks\nblog\nblogger\nbloggers\nblogging\n"
    "blogs\nblond\nblonde\nblood\nbloody\nbloom\nbloomberg\nblow\nblowing\nblowjob\nblowjobs\nblue\n"
    "blues\nbluetooth\nblvd\nbm\nbmw\nbo\nboard\nboards\nboat\nboating\nboats\nbob\n"
    "bobby\nboc\nbodies\nbody\nbold\nbolivia\nbolt\nbomb\nbon\nbond\nbondage\nbonds\n"
    "bone\nbones\nbonus\nboob\nboobs\nbook\nbooking\nbookings\nbookmark\nbookmarks\nbooks\nbookstore\n"
    "bool\nboolean\nboom\nboost\nboot\nbooth\nboots\nbooty\nborder\nborders\nbored\nboring\n"
    "born\nborough\nbosnia\nboss\nboston\nboth\nbother\nbotswana\nbottle\nbottles\nbottom\nbought\n"
    "boulder\nboulevard\nbound\nboundaries\nboundary\nbouquet\nboutique\nbow\nbowl\nbowling\nbox\nboxed\n"
    "boxes\nboxing\nboy\nboys\nbp\nbr\nbra\nbracelet\nbracelets\nbracket\nbrad\nbradford\n"
    "bradley\nbrain\nbrake\nbrakes\nbranch\nbranches\nbrand\nbrandon\nbrands\nbras\nbrass\nbrave\n"
    "brazil\nbrazilian\nbreach\nbread\nbreak\nbreakdown\nbreakfast\nbreaking\nbreaks\nbreast\nbreasts\nbreath\n"
    "breathing\nbreed\nbreeding\nbreeds\nbrian\nbrick\nbridal\nbride\nbridge\nbridges\nbrief\nbriefing\n"
    "briefly\nbriefs\nbright\nbrighton\nbrilliant\nbring\nbringing\nbrings\nbrisbane\nbristol\nbritain\nbritannica\n"
    "british\nbritney\nbroad\nbroadband\nbroadcast\nbroadcasting\nbroader\nbroadway\nbrochure\nbrochures\nbroke\nbroken\n"
    "broker\nbrokers\nbronze\nbrook\nbrooklyn\nbrooks\nbrother\nbrothers\nbrought\nbrown\nbrowse\nbrowser\n"
    "browsers\nbrowsing\nbruce\nbrunei\nbrunette\nbrunswick\nbrush\nbrussels\nbrutal\nbryan\nbryant\nbs\n"
    "bt\nbubble\nbuck\nbucks\nbudapest\nbuddy\nbudget\nbudgets\nbuf\nbuffalo\nbuffer\nbufing\n"
    "bug\nbugs\nbuild\nbuilder\nbuilders\nbuilding\nbuildings\nbuilds\nbuilt\nbukkake\nbulgaria\nbulgarian\n"
    "bulk\nbull\nbullet\nbulletin\nbumper\nbunch\nbundle\nbunny\nburden\nbureau\nburied\nburke\n"
    "burlington\nburn\nburner\nburning\nburns\nburst\nburton\nbus\nbuses\nbush\nbusiness\nbusinesses\n"
    "busty\nbusy\nbut\nbutler\nbutt\nbutter\nbutterfly\nbutton\nbuttons\nbutts\nbuy\nbuyer\n"
    "buyers\nbuying\nbuys\nbuzz\nbw\nby\nbye\nbyte\nbytes\nc\nca\ncab\n"
    "cabin\ncabinet\ncabinets\ncable\ncables\ncache\ncached\ncad\ncadillac\ncafe\ncage\ncake\n"
    "cakes\ncal\ncalcium\ncalculate\ncalculated\ncalculation\ncalculations\ncalculator\ncalculators\ncalendar\ncalendars\ncalgary\n"
    "calibration\ncalifornia\ncall\ncalled\ncalling\ncalls\ncalm\ncalvin\ncam\ncambodia\ncambridge\ncamcorder\n"
    "camcorders\ncame\ncamel\ncamera\ncameras\ncameron\ncameroon\ncamp\ncampaign\ncampaigns\ncampbell\ncamping\n"
    "camps\ncampus\ncams\ncan\ncanada\ncanadian\ncanal\ncanberra\ncancel\ncancellation\ncancelled\ncancer\n"
    "candidate\ncandidates\ncandle\ncandles\ncandy\ncannon\ncanon\ncant\ncanvas\ncanyon\ncap\ncapabilities\n"
    "capability\ncapable\ncapacity\ncape\ncapital\ncapitol\ncaps\ncaptain\ncapture\ncaptured\ncar\ncarb\n"
    "carbon\ncard\ncardiac\ncardiff\ncardiovascular\ncards\ncare\ncareer\ncareers\ncareful\ncarefully\ncarey\n"
    "cargo\ncaribbean\ncaring\ncarl\ncarlo\ncarlos\ncarmen\ncarnival\ncarol\ncarolina\ncaroline\ncarpet\n"
    "carried\ncarrier\ncarriers\ncarries\ncarroll\ncarry\ncarrying\ncars\ncart\ncarter\ncartoon\ncartoons\n"
    "cartridge\ncartridges\ncas\ncasa\ncase\ncases\ncasey\ncash\ncashiers\ncasino\ncasinos\ncasio\n"
    "cassette\ncast\ncasting\ncastle\ncasual\ncat\ncatalog\ncatalogs\ncatalogue\ncatalyst\ncatch\ncategories\n"
    "category\ncatering\ncathedral\ncatherine\ncatholic\ncats\ncattle\ncaught\ncause\ncaused\ncauses\ncausing\n"
    "caution\ncave\ncayman\ncb\ncbs\ncc\nccd\ncd\ncdna\ncds\ncdt\nce\n"
    "cedar\nceiling\ncelebrate\ncelebration\ncelebrities\ncelebrity\ncelebs\ncell\ncells\ncellular\nceltic\ncement\n"
    "cemetery\ncensus\ncent\ncenter\ncentered\ncenters\ncentral\ncentre\ncentres\ncents\ncenturies\ncentury\n"
    "ceo\nceramic\nceremony\ncertain\ncertainly\ncertificate\ncertificates\ncertification\ncertified\ncet\ncf\ncfr\n"
    "cg\ncgi\nch\nchad\nchain\nchains\nchair\nchairman\nchairs\nchallenge\nchallenged\nchallenges\n"
    "challenging\nchamber\nchambers\nchampagne\nchampion\nchampions\nchampionship\nchampionships\nchan\nchance\nchancellor\nchances\n"
    "change\nchanged\nchangelog\nchanges\nchanging\nchannel\nchannels\nchaos\nchapel\nchapter\nchapters\nchar\n"
    "character\ncharacteristic\ncharacteristics\ncharacterization\ncharacterized\ncharacters\ncharge\ncharged\ncharger\nchargers\ncharges\ncharging\n"
    "charitable\ncharity\ncharles\ncharleston\ncharlie\ncharlotte\ncharm\ncharming\ncharms\nchart\ncharter\ncharts\n"
    "chase\nchassis\nchat\ncheap\ncheaper\ncheapest\ncheat\ncheats\ncheck\nchecked\nchecking\nchecklist\n"
    "checkout\nchecks\ncheers\ncheese\nchef\nchelsea\nchem\nchemical\nchemicals\nchemistry\nchen\ncheque\n"
    "cherry\nchess\nchest\nchester\nchevrolet\nchevy\nchi\nchicago\nchick\nchicken\nchicks\nchief\n"
    "child\nchildhood\nchildren\nchildrens\nchile\nchina\nchinese\nchip\nchips\ncho\nchocolate\nchoice\n"
    "choices\nchoir\ncholesterol\nchoose\nchoosing\nchorus\nchose\nchosen\nchris\nchrist\nchristian\nchristianity\n"
    "christians\nchristina\nchristine\nchristmas\nchristopher\nchrome\nchronic\nchronicle\nchronicles\nchrysler\nchubby\nchuck\n"
    "church\nchurches\nci\ncia\ncialis\nciao\ncigarette\ncigarettes\ncincinnati\ncindy\ncinema\ncingular\n"
    "cio\ncir\ncircle\ncircles\ncircuit\ncircuits\ncircular\ncirculation\ncircumstances\ncircus\ncisco\ncitation\n"
    "citations\ncite\ncited\ncities\ncitizen\ncitizens\ncitizenship\ncity\ncitysearch\ncivic\ncivil\ncivilian\n"
    "civilization\ncj\ncl\nclaim\nclaimed\nclaims\nclaire\nclan\nclara\nclarity\nclark\nclarke\n"
    "class\nclasses\nclassic\nclassical\nclassics\nclassification\nclassified\nclassifieds\nclassroom\nclause\nclay\nclean\n"
    "cleaner\ncleaners\ncleaning\ncleanup\nclear\nclearance\ncleared\nclearing\nclearly\nclerk\ncleveland\nclick\n"
    "clicking\nclicks\nclient\nclients\ncliff\nclimate\nclimb\nclimbing\nclinic\nclinical\nclinics\nclinton\n"
    "clip\nclips\nclock\nclocks\nclone\nclose\nclosed\nclosely\ncloser\ncloses\nclosest\nclosing\n"
    "closure\ncloth\nclothes\nclothing\ncloud\nclouds\ncloudy\nclub\nclubs\ncluster\nclusters\ncm\n"
    "cms\ncn\ncnet\ncnn\nco\ncoach\ncoaches\ncoaching\ncoal\ncoalition\ncoast\ncoastal\n"
    "coat\ncoated\ncoating\ncock\ncocks\ncocktail\ncod\ncode\ncodes\ncoding\ncoffee\ncognitive\n"
    "cohen\ncoin\ncoins\ncol\ncold\ncole\ncoleman\ncolin\ncollaboration\ncollaborative\ncollapse\ncollar\n"
    "colleague\ncolleagues\ncollect\ncollectables\ncollected\ncollectible\ncollectibles\ncollecting\ncollection\ncollections\ncollective\ncollector\n"
    "collectors\ncollege\ncolleges\ncollins\ncologne\ncolombia\ncolon\ncolonial\ncolony\ncolor\ncolorado\ncolored\n"
    "colors\ncolour\ncolours\ncolumbia\ncolumbus\ncolumn\ncolumnists\ncolumns\ncom\ncombat\ncombination\ncombinations\n"
    "combine\ncombined\ncombines\ncombining\ncombo\ncome\ncomedy\ncomes\ncomfort\ncomfortable\ncomic\ncomics\n"
    "coming\ncomm\ncommand\ncommander\ncommands\ncomment\ncommentary\ncommented\ncomments\ncommerce\ncommercial\ncommission\n"
    "commissioner\ncommissioners\ncommissions\ncommit\ncommitment\ncommitments\ncommitted\ncommittee\ncommittees\ncommodities\ncommodity\ncommon\n"
    "commonly\ncommons\ncommonwealth\ncommunicate\ncommunication\ncommunications\ncommunist\ncommunities\ncommunity\ncomp\ncompact\ncompanies\n"
    "companion\ncompany\ncompaq\ncomparable\ncomparative\ncompare\ncompared\ncomparing\ncomparison\ncomparisons\ncompatibility\ncompatible\n"
    "compensation\ncompete\ncompetent\ncompeting\ncompetition\ncompetitions\ncompetitive\ncompetitors\ncompilation\ncompile\ncompiled\ncompiler\n"
    "complaint\ncomplaints\ncomplement\ncomplete\ncompleted\ncompletely\ncompleting\ncompletion\ncomplex\ncomplexity\ncompliance\ncompliant\n"
    "complicated\ncomplications\ncomplimentary\ncomply\ncomponent\ncomponents\ncomposed\ncomposer\ncomposite\ncomposition\ncompound\ncompounds\n"
    "comprehensive\ncompressed\ncompression\ncompromise\ncomputation\ncomputational\ncompute\ncomputed\ncomputer\ncomputers\ncomputing\ncon\n"
    "concentrate\nconcentration\nconcentrations\nconcept\nconcepts\nconceptual\nconcern\nconcerned\nconcerning\nconcerns\nconcert\nconcerts\n"
    "conclude\nconcluded\nconclusion\nconclusions\nconcord\nconcrete\ncondition\nconditional\nconditioning\nconditions\ncondo\ncondos\n"
    "conduct\nconducted\nconducting\nconf\nconference\nconferences\nconferencing\nconfidence\nconfident\nconfidential\nconfidentiality\nconfig\n"
    "configuration\nconfigurations\nconfigure\nconfigured\nconfiguring\nconfirm\nconfirmation\nconfirmed\nconflict\nconflicts\nconfused\nconfusion\n"
    "congo\ncongratulations\ncongress\ncongressional\nconjunction\nconnect\nconnected\nconnecticut\nconnecting\nconnection\nconnections\nconnectivity\n"
    "connector\nconnectors\ncons\nconscious\nconsciousness\nconsecutive\nconsensus\nconsent\nconsequence\nconsequences\nconsequently\nconservation\n"
    "conservative\nconsider\nconsiderable\nconsideration\nconsiderations\nconsidered\nconsidering\nconsiders\nconsist\nconsistency\nconsistent\nconsistently\n"
    "consisting\nconsists\nconsole\nconsoles\nconsolidated\nconsolidation\nconsortium\nconspiracy\nconst\nconstant\nconstantly\nconstitute\n"
    "constitutes\nconstitution\nconstitutional\nconstraint\nconstraints\nconstruct\nconstructed\nconstruction\nconstructor\nconsult\nconsultancy\nconsultant\n"
    "consultants\nconsultation\nconsulting\nconsumer\nconsumers\nconsumption\ncontact\ncontacted\ncontacting\ncontacts\ncontain\ncontained\n"
    "container\ncontainers\ncontaining\ncontains\ncontamination\ncontemporary\ncontent\ncontents\ncontest\ncontests\ncontext\ncontinent\n"
    "continental\ncontinually\ncontinue\ncontinued\ncontinues\ncontinuing\ncontinuity\ncontinuous\ncontinuously\ncontract\ncontracting\ncontractor\n"
    "contractors\ncontracts\ncontrary\ncontrast\ncontribute\ncontributed\ncontributing\ncontribution\ncontributions\ncontributor\ncontributors\ncontrol\n"
    "controlled\ncontroller\ncontrollers\ncontrolling\ncontrols\ncontroversial\ncontroversy\nconvenience\nconvenient\nconvention\nconventional\nconventions\n"
    "convergence\nconversation\nconversations\nconversion\nconvert\nconverted\nconverter\nconvertible\nconvicted\nconviction\nconvinced\ncook\n"
    "cookbook\ncooked\ncookie\ncookies\ncooking\ncool\ncooler\ncooling\ncooper\ncooperation\ncooperative\ncoordinate\n"
    "coordinated\ncoordinates\ncoordination\ncoordinator\ncop\ncope\ncopied\ncopies\ncopper\ncopy\ncopying\ncopyright\n"
    "copyrighted\ncopyrights\ncoral\ncord\ncordless\ncore\ncork\ncorn\ncornell\ncorner\ncorners\ncornwall\n"
    "corp\ncorporate\ncorporation\ncorporations\ncorps\ncorpus\ncorrect\ncorrected\ncorrection\ncorrections\ncorrectly\ncorrelation\n"
    "correspondence\ncorresponding\ncorruption\ncos\ncosmetic\ncosmetics\ncost\ncosta\ncosts\ncostume\ncostumes\ncottage\n"
    "cottages\ncotton\ncould\ncouncil\ncouncils\ncounsel\ncounseling\ncount\ncounted\ncounter\ncounters\ncounties\n"
    "counting\ncountries\ncountry\ncounts\ncounty\ncouple\ncoupled\ncouples\ncoupon\ncoupons\ncourage\ncourier\n"
    "course\ncourses\ncourt\ncourtesy\ncourts\ncove\ncover\ncoverage\ncovered\ncovering\ncovers\ncow\n"
    "cowboy\ncox\ncp\ncpu\ncr\ncrack\ncradle\ncraft\ncrafts\ncraig\ncrap\ncraps\n"
    "crash\ncrawford\ncrazy\ncream\ncreate\ncreated\ncreates\ncreating\ncreation\ncreations\ncreative\ncreativity\n"
    "creator\ncreature\ncreatures\ncredit\ncredits\ncreek\ncrest\ncrew\ncricket\ncrime\ncrimes\ncriminal\n"
    "crisis\ncriteria\ncriterion\ncritical\ncriticism\ncritics\ncrm\ncroatia\ncrop\ncrops\ncross\ncrossing\n"
    "crossword\ncrowd\ncrown\ncrucial\ncrude\ncruise\ncruises\ncruz\ncry\ncrystal\ncs\ncss\n"
    "cst\nct\nctrl\ncu\ncuba\ncube\ncubic\ncuisine\ncult\ncultural\nculture\ncultures\n"
    "cum\ncumshot\ncumshots\ncumulative\ncunt\ncup\ncups\ncure\ncurious\ncurrencies\ncurrency\ncurrent\n"
    "currently\ncurriculum\ncursor\ncurtis\ncurve\ncurves\ncustody\ncustom\ncustomer\ncustomers\ncustomise\ncustomize\n"
    "customized\ncustoms\ncut\ncute\ncuts\ncutting\ncv\ncvs\ncw\ncyber\ncycle\ncycles\n"
    "cycling\ncylinder\ncyprus\ncz\nczech\nd\nda\ndad\ndaddy\ndaily\ndairy\ndaisy\n"
    "dakota\ndale\ndallas\ndam\ndamage\ndamaged\ndamages\ndame\ndamn\ndan\ndana\ndance\n"
    "dancing\ndanger\ndangerous\ndaniel\ndanish\ndanny\ndans\ndare\ndark\ndarkness\ndarwin\ndas\n"
    "dash\ndat\ndata\ndatabase\ndatabases\ndate\ndated\ndates\ndating\ndaughter\ndaughters\ndave\n"
    "david\ndavidson\ndavis\ndawn\nday\ndays\ndayton\ndb\ndc\ndd\nddr\nde\n"
    "dead\ndeadline\ndeadly\ndeaf\ndeal\ndealer\ndealers\ndealing\ndeals\ndealt\ndealtime\ndean\n"
    "dear\ndeath\ndeaths\ndebate\ndebian\ndeborah\ndebt\ndebug\ndebut\ndec\ndecade\ndecades\n"
    "december\ndecent\ndecide\ndecided\ndecimal\ndecision\ndecisions\ndeck\ndeclaration\ndeclare\ndeclared\ndecline\n"
    "declined\ndecor\ndecorating\ndecorative\ndecrease\ndecreased\ndedicated\ndee\ndeemed\ndeep\ndeeper\ndeeply\n"
    "deer\ndef\ndefault\ndefeat\ndefects\ndefence\ndefend\ndefendant\ndefense\ndefensive\ndeferred\ndeficit\n"
    "define\ndefined\ndefines\ndefining\ndefinitely\ndefinition\ndefinitions\ndegree\ndegrees\ndel\ndelaware\ndelay\n"
    "delayed\ndelays\ndelegation\ndelete\ndeleted\ndelhi\ndelicious\ndelight\ndeliver\ndelivered\ndelivering\ndelivers\n"
    "delivery\ndell\ndelta\ndeluxe\ndem\ndemand\ndemanding\ndemands\ndemo\ndemocracy\ndemocrat\ndemocratic\n"
    "democrats\ndemographic\ndemonstrate\ndemonstrated\ndemonstrates\ndemonstration\nden\ndenial\ndenied\ndenmark\ndennis\ndense\n"
    "density\ndental\ndentists\ndenver\ndeny\ndepartment\ndepartmental\ndepartments\ndeparture\ndepend\ndependence\ndependent\n"
    "depending\ndepends\ndeployment\ndeposit\ndeposits\ndepot\ndepression\ndept\ndepth\ndeputy\nder\nderby\n"
    "derek\nderived\ndes\ndescending\ndescribe\ndescribed\ndescribes\ndescribing\ndescription\ndescriptions\ndesert\ndeserve\n"
    "design\ndesignated\ndesignation\ndesigned\ndesigner\ndesigners\ndesigning\ndesigns\ndesirable\ndesire\ndesired\ndesk\n"
    "desktop\ndesktops\ndesperate\ndespite\ndestination\ndestinations\ndestiny\ndestroy\ndestroyed\ndestruction\ndetail\ndetailed\n"
    "details\ndetect\ndetected\ndetection\ndetective\ndetector\ndetermination\ndetermine\ndetermined\ndetermines\ndetermining\ndetroit\n"
    "deutsch\ndeutsche\ndeutschland\ndev\ndevel\ndevelop\ndeveloped\ndeveloper\ndevelopers\ndeveloping\ndevelopment\ndevelopmental\n"
    "developments\ndevelops\ndeviant\ndeviation\ndevice\ndevices\ndevil\ndevon\ndevoted\ndf\ndg\ndh\n"
    "di\ndiabetes\ndiagnosis\ndiagnostic\ndiagram\ndial\ndialog\ndialogue\ndiameter\ndiamond\ndiamonds\ndiana\n"
    "diane\ndiary\ndice\ndick\ndicke\ndicks\ndictionaries\ndictionary\ndid\ndie\ndied\ndiego\n"
    "dies\ndiesel\ndiet\ndietary\ndiff\ndiffer\ndifference\ndifferences\ndifferent\ndifferential\ndifferently\ndifficult\n"
    "difficulties\ndifficulty\ndiffs\ndig\ndigest\ndigit\ndigital\ndildo\ndildos\ndim\ndimension\ndimensional\n"
    "dimensions\ndining\ndinner\ndip\ndiploma\ndir\ndirect\ndirected\ndirection\ndirections\ndirective\ndirectly\n"
    "director\ndirectories\ndirectors\ndirectory\ndirt\ndirty\ndis\ndisabilities\ndisability\ndisable\ndisabled\ndisagree\n"
    "disappointed\ndisaster\ndisc\ndischarge\ndisciplinary\ndiscipline\ndisciplines\ndisclaimer\ndisclaimers\ndisclose\ndisclosure\ndisco\n"
    "discount\ndiscounted\ndiscounts\ndiscover\ndiscovered\ndiscovery\ndiscrete\ndiscretion\ndiscrimination\ndiscs\ndiscuss\ndiscussed\n"
    "discusses\ndiscussing\ndiscussion\ndiscussions\ndisease\ndiseases\ndish\ndishes\ndisk\ndisks\ndisney\ndisorder\n"
    "disorders\ndispatch\ndispatched\ndisplay\ndisplayed\ndisplaying\ndisplays\ndisposal\ndisposition\ndispute\ndisputes\ndist\n"
    "distance\ndistances\ndistant\ndistinct\ndistinction\ndistinguished\ndistribute\ndistributed\ndistribution\ndistributions\ndistributor\ndistributors\n"
    "district\ndistricts\ndisturbed\ndiv\ndive\ndiverse\ndiversity\ndivide\ndivided\ndividend\ndivine\ndiving\n"
    "division\ndivisions\ndivorce\ndivx\ndiy\ndj\ndk\ndl\ndm\ndna\ndns\ndo\n"
    "doc\ndock\ndocs\ndoctor\ndoctors\ndoctrine\ndocument\ndocumentary\ndocumentation\ndocumented\ndocuments\ndod\n"
    "dodge\ndoe\ndoes\ndog\ndogs\ndoing\ndoll\ndollar\ndollars\ndolls\ndom\ndomain\n"
    "domains\ndome\ndomestic\ndominant\ndominican\ndon\ndonald\ndonate\ndonated\ndonation\ndonations\ndone\n"
    "donna\ndonor\ndonors\ndont\ndoom\ndoor\ndoors\ndos\ndosage\ndose\ndot\ndouble\n"
    "doubt\ndoug\ndouglas\ndover\ndow\ndown\ndownload\ndownloadable\ndownloaded\ndownloading\ndownloads\ndowntown\n"
    "dozen\ndozens\ndp\ndpi\ndr\ndraft\ndrag\ndragon\ndrain\ndrainage\ndrama\ndramatic\n"
    "dramatically\ndraw\ndrawing\ndrawings\ndrawn\ndraws\ndream\ndreams\ndress\ndressed\ndresses\ndressing\n"
    "drew\ndried\ndrill\ndrilling\ndrink\ndrinking\ndrinks\ndrive\ndriven\ndriver\ndrivers\ndrives\n"
    "driving\ndrop\ndropped\ndrops\ndrove\ndrug\ndrugs\ndrum\ndrums\ndrunk\ndry\ndryer\n"
    "ds\ndsc\ndsl\ndt\ndts\ndu\ndual\ndubai\ndublin\nduck\ndude\ndue\n"
    "dui\nduke\ndumb\ndump\nduncan\nduo\nduplicate\ndurable\nduration\ndurham\nduring\ndust\n"
    "dutch\nduties\nduty\ndv\ndvd\ndvds\ndx\ndying\ndylan\ndynamic\ndynamics\ne\n"
    "ea\neach\neagle\neagles\near\nearl\nearlier\nearliest\nearly\nearn\nearned\nearning\n"
    "earnings\nearrings\nears\nearth\nearthquake\nease\neasier\neasily\neast\neaster\neastern\neasy\n"
    "eat\neating\neau\nebay\nebony\nebook\nebooks\nec\necho\neclipse\neco\necological\n"
    "ecology\necommerce\neconomic\neconomics\neconomies\neconomy\necuador\ned\neddie\neden\nedgar\nedge\n"
    "edges\nedinburgh\nedit\nedited\nediting\nedition\neditions\neditor\neditorial\neditorials\neditors\nedmonton\n"
    "eds\nedt\neducated\neducation\neducational\neducators\nedward\nedwards\nee\nef\neffect\neffective\n"
    "effectively\neffectiveness\neffects\nefficiency\nefficient\nefficiently\neffort\nefforts\neg\negg\neggs\negypt\n"
    "egyptian\neh\neight\neither\nejaculation\nel\nelder\nelderly\nelect\nelected\nelection\nelections\n"
    "electoral\nelectric\nelectrical\nelectricity\nelectro\nelectron\nelectronic\nelectronics\nelegant\nelement\nelementary\nelements\n"
    "elephant\nelevation\neleven\neligibility\neligible\neliminate\nelimination\nelite\nelizabeth\nellen\nelliott\nellis\n"
    "else\nelsewhere\nelvis\nem\nemacs\nemail\nemails\nembassy\nembedded\nemerald\nemergency\nemerging\n"
    "emily\neminem\nemirates\nemission\nemissions\nemma\nemotional\nemotions\nemperor\nemphasis\nempire\nempirical\n"
    "employ\nemployed\nemployee\nemployees\nemployer\nemployers\nemployment\nempty\nen\nenable\nenabled\nenables\n"
    "enabling\nenb\nenclosed\nenclosure\nencoding\nencounter\nencountered\nencourage\nencouraged\nencourages\nencouraging\nencryption\n"
    "encyclopedia\nend\nendangered\nended\nendif\nending\nendless\nendorsed\nendorsement\nends\nenemies\nenemy\n"
    "energy\nenforcement\neng\nengage\nengaged\nengagement\nengaging\nengine\nengineer\nengineering\nengineers\nengines\n"
    "england\nenglish\nenhance\nenhanced\nenhancement\nenhancements\nenhancing\nenjoy\nenjoyed\nenjoying\nenlarge\nenlargement\n"
    "enormous\nenough\nenquiries\nenquiry\nenrolled\nenrollment\nensemble\nensure\nensures\nensuring\nent\nenter\n"
    "entered\nentering\nenterprise\nenterprises\nenters\nentertaining\nentertainment\nentire\nentirely\nentities\nentitled\nentity\n"
    "entrance\nentrepreneur\nentrepreneurs\nentries\nentry\nenvelope\nenvironment\nenvironmental\nenvironments\nenzyme\neos\nep\n"
    "epa\nepic\nepinions\nepisode\nepisodes\nepson\neq\nequal\nequality\nequally\nequation\nequations\n"
    "equilibrium\nequipment\nequipped\nequity\nequivalent\ner\nera\neric\nericsson\nerik\nerotic\nerotica\n"
    "erp\nerror\nerrors\nes\nescape\nescort\nescorts\nespecially\nespn\nessay\nessays\nessence\n"
    "essential\nessentially\nessentials\nessex\nest\nestablish\nestablished\nestablishing\nestablishment\nestate\nestates\nestimate\n"
    "estimated\nestimates\nestimation\nestonia\net\netc\neternal\nethernet\nethical\nethics\nethiopia\nethnic\n"
    "eu\neugene\neur\neuro\neurope\neuropean\neuros\nev\neva\neval\nevaluate\nevaluated\n"
    "evaluating\nevaluation\nevaluations\nevanescence\nevans\neve\neven\nevening\nevent\nevents\neventually\never\n"
    "every\neverybody\neveryday\neveryone\neverything\neverywhere\nevidence\nevident\nevil\nevolution\nex\nexact\n"
    "exactly\nexam\nexamination\nexaminations\nexamine\nexamined\nexamines\nexamining\nexample\nexamples\nexams\nexceed\n"
    "excel\nexcellence\nexcellent\nexcept\nexception\nexceptional\nexceptions\nexcerpt\nexcess\nexcessive\nexchange\nexchanges\n"
    "excited\nexcitement\nexciting\nexclude\nexcluded\nexcluding\nexclusion\nexclusive\nexclusively\nexcuse\nexec\nexecute\n"
    "executed\nexecution\nexecutive\nexecutives\nexempt\nexemption\nexercise\nexercises\nexhaust\nexhibit\nexhibition\nexhibitions\n"
    "exhibits\nexist\nexisted\nexistence\nexisting\nexists\nexit\nexotic\nexp\nexpand\nexpanded\nexpanding\n"
    "expansion\nexpansys\nexpect\nexpectations\nexpected\nexpects\nexpedia\nexpenditure\nexpenditures\nexpense\nexpenses\nexpensive\n"
    "experience\nexperienced\nexperiences\nexperiencing\nexperiment\nexperimental\nexperiments\nexpert\nexpertise\nexperts\nexpiration\nexpired\n"
    "expires\nexplain\nexplained\nexplaining\nexplains\nexplanation\nexplicit\nexplicitly\nexploration\nexplore\nexplorer\nexploring\n"
    "explosion\nexpo\nexport\nexports\nexposed\nexposure\nexpress\nexpressed\nexpression\nexpressions\next\nextend\n"
    "extended\nextending\nextends\nextension\nextensions\nextensive\nextent\nexterior\nexternal\nextra\nextract\nextraction\n"
    "extraordinary\nextras\nextreme\nextremely\neye\neyed\neyes\nez\nf\nfa\nfabric\nfabrics\n"
    "fabulous\nface\nfaced\nfaces\nfacial\nfacilitate\nfacilities\nfacility\nfacing\nfact\nfactor\nfactors\n"
    "factory\nfacts\nfaculty\nfail\nfailed\nfailing\nfails\nfailure\nfailures\nfair\nfairfield\nfairly\n"
    "fairy\nfaith\nfake\nfall\nfallen\nfalling\nfalls\nfalse\nfame\nfamiliar\nfamilies\nfamily\n"
    "famous\nfan\nfancy\nfans\nfantastic\nfantasy\nfaq\nfaqs\nfar\nfare\nfares\nfarm\n"
    "farmer\nfarmers\nfarming\nfarms\nfascinating\nfashion\nfast\nfaster\nfastest\nfat\nfatal\nfate\n"
    "father\nfathers\nfatty\nfault\nfavor\nfavorite\nfavorites\nfavors\nfavour\nfavourite\nfavourites\nfax\n"
    "fbi\nfc\nfcc\nfd\nfda\nfe\nfear\nfears\nfeat\nfeature\nfeatured\nfeatures\n"
    "featuring\nfeb\nfebruary\nfed\nfederal\nfederation\nfee\nfeed\nfeedback\nfeeding\nfeeds\nfeel\n"
    "feeling\nfeelings\nfeels\nfees\nfeet\nfell\nfellow\nfellowship\nfelt\nfemale\nfemales\nfence\n"
    "feof\nferrari\nferry\nfestival\nfestivals\nfetish\nfever\nfew\nfewer\nff\nfg\nfi\n"
    "fiber\nfibre\nfiction\nfield\nfields\nfifteen\nfifth\nfifty\nfig\nfight\nfighter\nfighters\n"
    "fighting\nfigure\nfigured\nfigures\nfiji\nfile\nfiled\nfilename\nfiles\nfiling\nfill\nfilled\n"
    "filling\nfilm\nfilme\nfilms\nfilter\nfiltering\nfilters\nfin\nfinal\nfinalize\nfinally\nfinals\n"
    "finance\nfinances\nfinancial\nfinancing\nfind\nfindarticles\nfinder\nfinding\nfindings\nfindlaw\nfinds\nfine\n"
    "finest\nfinger\nfingering\nfingers\nfinish\nfinished\nfinishing\nfinite\nfinland\nfinnish\nfioricet\nfire\n"
    "fired\nfirefox\nfireplace\nfires\nfirewall\nfirewire\nfirm\nfirms\nfirmware\nfirst\nfiscal\nfish\n"
    "fisher\nfisheries\nfishing\nfist\nfisting\nfit\nfitness\nfits\nfitted\nfitting\nfive\nfix\n"
    "fixed\nfixes\nfixtures\nfl\nflag\nflags\nflame\nflash\nflashers\nflashing\nflat\nflavor\n"
    "fleece\nfleet\nflesh\nflex\nflexibility\nflexible\nflickr\nflight\nflights\nflip\nfloat\nfloating\n"
    "flood\nfloor\nflooring\nfloors\nfloppy\nfloral\nflorence\nflorida\nflorist\nflorists\nflour\nflow\n"
    "flower\nflowers\nflows\nfloyd\nflu\nfluid\nflush\nflux\nfly\nflyer\nflying\nfm\n"
    "fo\nfoam\nfocal\nfocus\nfocused\nfocuses\nfocusing\nfog\nfold\nfolder\nfolders\nfolding\n"
    "folk\nfolks\nfollow\nfollowed\nfollowing\nfollows\nfont\nfonts\nfoo\nfood\nfoods\nfool\n"
    "foot\nfootage\nfootball\nfootwear\nfor\nforbes\nforbidden\nforce\nforced\nforces\nford\nforecast\n"
    "forecasts\nforeign\nforest\nforestry\nforests\nforever\nforge\nforget\nforgot\nforgotten\nfork\nform\n"
    "formal\nformat\nformation\nformats\nformatting\nformed\nformer\nformerly\nforming\nforms\nformula\nfort\n"
    "forth\nfortune\nforty\nforum\nforums\nforward\nforwarding\nfossil\nfoster\nfoto\nfotos\nfought\n"
    "foul\nfound\nfoundation\nfoundations\nfounded\nfounder\nfountain\nfour\nfourth\nfox\nfp\nfr\n"
    "fraction\nfragrance\nfragrances\nframe\nframed\nframes\nframework\nframing\nfrance\nfranchise\nfrancis\nfrancisco\n"
    "frank\nfrankfurt\nfranklin\nfraser\nfraud\nfred\nfrederick\nfree\nfreebsd\nfreedom\nfreelance\nfreely\n"
    "freeware\nfreeze\nfreight\nfrench\nfrequencies\nfrequency\nfrequent\nfrequently\nfresh\nfri\nfriday\nfridge\n"
    "friend\nfriendly\nfriends\nfriendship\nfrog\nfrom\nfront\nfrontier\nfrontpage\nfrost\nfrozen\nfruit\n"
    "fruits\nfs\nft\nftp\nfu\nfuck\nfucked\nfucking\nfuel\nfuji\nfujitsu\nfull\n"
    "fully\nfun\nfunction\nfunctional\nfunctionality\nfunctioning\nfunctions\nfund\nfundamental\nfundamentals\nfunded\nfunding\n"
    "fundraising\nfunds\nfuneral\nfunk\nfunky\nfunny\nfur\nfurnished\nfurnishings\nfurniture\nfurther\nfurthermore\n"
    "fusion\nfuture\nfutures\nfuzzy\nfw\nfwd\nfx\nfy\ng\nga\ngabriel\ngadgets\n"
    "gage\ngain\ngained\ngains\ngalaxy\ngale\ngalleries\ngallery\ngambling\ngame\ngamecube\ngames\n"
    "gamespot\ngaming\ngamma\ngang\ngangbang\ngap\ngaps\ngarage\ngarbage\ngarcia\ngarden\ngardening\n"
    "gardens\ngarlic\ngarmin\ngary\ngas\ngasoline\ngate\ngates\ngateway\ngather\ngathered\ngathering\n"
    "gauge\ngave\ngay\ngays\ngazette\ngb\ngba\ngbp\ngc\ngcc\ngd\ngdp\n"
    "ge\ngear\ngeek\ngel\ngem\ngen\ngender\ngene\ngenealogy\ngeneral\ngenerally\ngenerate\n"
    "generated\ngenerates\ngenerating\ngeneration\ngenerations\ngenerator\ngenerators\ngeneric\ngenerous\ngenes\ngenesis\ngenetic\n"
    "genetics\ngeneva\ngenius\ngenome\ngenre\ngenres\ngentle\ngentleman\ngently\ngenuine\ngeo\ngeographic\n"
    "geographical\ngeography\ngeological\ngeology\ngeometry\ngeorge\ngeorgia\ngerald\ngerman\ngermany\nget\ngets\n"
    "getting\ngg\nghana\nghost\nghz\ngi\ngiant\ngiants\ngibraltar\ngibson\ngif\ngift\n"
    "gifts\ngig\ngilbert\ngirl\ngirlfriend\ngirls\ngis\ngive\ngiven\ngives\ngiving\ngl\n"
    "glad\nglance\nglasgow\nglass\nglasses\nglen\nglenn\nglobal\nglobe\nglory\nglossary\ngloves\n"
    "glow\nglucose\ngm\ngmbh\ngmc\ngmt\ngnome\ngnu\ngo\ngoal\ngoals\ngoat\n"
    "god\ngods\ngoes\ngoing\ngold\ngolden\ngolf\ngone\ngonna\ngood\ngoods\ngoogle\n"
    "gordon\ngore\ngorgeous\ngospel\ngossip\ngot\ngothic\ngoto\ngotta\ngotten\ngourmet\ngovernance\n"
    "governing\ngovernment\ngovernmental\ngovernments\ngovernor\ngp\ngpl\ngps\ngr\ngrab\ngrace\ngrad\n"
    "grade\ngrades\ngradually\ngraduate\ngraduated\ngraduates\ngraduation\ngraham\ngrain\ngrammar\ngrams\ngrand\n"
    "grande\ngranny\ngrant\ngranted\ngrants\ngraph\ngraphic\ngraphical\ngraphics\ngraphs\ngras\ngrass\n"
    "grateful\ngratis\ngratuit\ngrave\ngravity\ngray\ngreat\ngreater\ngreatest\ngreatly\ngreece\ngreek\n"
    "green\ngreene\ngreenhouse\ngreensboro\ngreeting\ngreetings\ngreg\ngregory\ngrenada\ngrew\ngrey\ngrid\n"
    "griffin\ngrill\ngrip\ngrocery\ngroove\ngross\nground\ngrounds\ngroundwater\ngroup\ngroups\ngrove\n"
    "grow\ngrowing\ngrown\ngrows\ngrowth\ngs\ngsm\ngst\ngt\ngtk\nguam\nguarantee\n"
    "guaranteed\nguarantees\nguard\nguardian\nguards\nguatemala\nguess\nguest\nguestbook\nguests\ngui\nguidance\n"
    "guide\nguided\nguidelines\nguides\nguild\nguilty\nguinea\nguitar\nguitars\ngulf\ngun\nguns\n"
    "guru\nguy\nguyana\nguys\ngym\ngzip\nh\nha\nhabitat\nhabits\nhack\nhacker\n"
    "had\nhair\nhairy\nhaiti\nhalf\nhalifax\nhall\nhalloween\nhalo\nham\nhamburg\nhamilton\n"
    "hammer\nhampshire\nhampton\nhand\nhandbags\nhandbook\nhanded\nhandheld\nhandhelds\nhandjob\nhandjobs\nhandle\n"
    "handled\nhandles\nhandling\nhandmade\nhands\nhandy\nhang\nhanging\nhans\nhansen\nhappen\nhappened\n"
    "happening\nhappens\nhappiness\nhappy\nharassment\nharbor\nharbour\nhard\nhardcore\nhardcover\nharder\nhardly\n"
    "hardware\nhardwood\nharley\nharm\nharmful\nharmony\nharold\nharper\nharris\nharrison\nharry\nhart\n"
    "hartford\nharvard\nharvest\nharvey\nhas\nhash\nhat\nhate\nhats\nhave\nhaven\nhaving\n"
    "hawaii\nhawaiian\nhawk\nhay\nhayes\nhazard\nhazardous\nhazards\nhb\nhc\nhd\nhdtv\n"
    "he\nhead\nheaded\nheader\nheaders\nheading\nheadline\nheadlines\nheadphones\nheadquarters\nheads\nheadset\n"
    "healing\nhealth\nhealthcare\nhealthy\nhear\nheard\nhearing\nhearings\nheart\nhearts\nheat\nheated\n"
    "heater\nheath\nheather\nheating\nheaven\nheavily\nheavy\nhebrew\nheel\nheight\nheights\nheld\n"
    "helen\nhelena\nhelicopter\nhell\nhello\nhelmet\nhelp\nhelped\nhelpful\nhelping\nhelps\nhence\n"
    "henderson\nhenry\nhentai\nhepatitis\nher\nherald\nherb\nherbal\nherbs\nhere\nhereby\nherein\n"
    "heritage\nhero\nheroes\nherself\nhewlett\nhex\nhey\nhh\nhi\nhidden\nhide\nhierarchy\n"
    "high\nhigher\nhighest\nhighland\nhighlight\nhighlighted\nhighlights\nhighly\nhighs\nhighway\nhighways\nhiking\n"
    "hill\nhills\nhilton\nhim\nhimself\nhindu\nhint\nhints\nhip\nhire\nhired\nhiring\n"
    "his\nhispanic\nhist\nhistoric\nhistorical\nhistory\nhit\nhitachi\nhits\nhitting\nhiv\nhk\n"
    "hl\nho\nhobbies\nhobby\nhockey\nhold\nholdem\nholder\nholders\nholding\nholdings\nholds\n"
    "hole\nholes\nholiday\nholidays\nholland\nhollow\nholly\nhollywood\nholmes\nholocaust\nholy\nhome\n"
    "homeland\nhomeless\nhomepage\nhomes\nhometown\nhomework\nhon\nhonda\nhonduras\nhonest\nhoney\nhong\n"
    "honolulu\nhonor\nhonors\nhood\nhook\nhop\nhope\nhoped\nhopefully\nhopes\nhoping\nhopkins\n"
    "horizon\nhorizontal\nhormone\nhorn\nhorny\nhorrible\nhorror\nhorse\nhorses\nhose\nhospital\nhospitality\n"
    "hospitals\nhost\nhosted\nhostel\nhostels\nhosting\nhosts\nhot\nhotel\nhotels\nhotmail\nhottest\n"
    "hour\nhourly\nhours\nhouse\nhousehold\nhouseholds\nhouses\nhousewares\nhousewives\nhousing\nhouston\nhow\n"
    "howard\nhowever\nhowto\nhp\nhq\nhr\nhref\nhrs\nhs\nht\nhtml\nhttp\n"
    "hu\nhub\nhudson\nhuge\nhugh\nhughes\nhugo\nhull\nhuman\nhumanitarian\nhumanities\nhumanity\n"
    "humans\nhumidity\nhumor\nhundred\nhundreds\nhung\nhungarian\nhungary\nhunger\nhungry\nhunt\nhunter\n"
    "hunting\nhuntington\nhurricane\nhurt\nhusband\nhwy\nhybrid\nhydraulic\nhydrocodone\nhydrogen\nhygiene\nhypothesis\n"
    "hypothetical\nhyundai\nhz\ni\nia\nian\nibm\nic\nice\niceland\nicon\nicons\n"
    "icq\nict\nid\nidaho\nide\nidea\nideal\nideas\nidentical\nidentification\nidentified\nidentifier\n"
    "identifies\nidentify\nidentifying\nidentity\nidle\nidol\nids\nie\nieee\nif\nignore\nignored\n"
    "ii\niii\nil\nill\nillegal\nillinois\nillness\nillustrated\nillustration\nillustrations\nim\nimage\n"
    "images\nimagination\nimagine\nimaging\nimg\nimmediate\nimmediately\nimmigrants\nimmigration\nimmune\nimmunology\nimpact\n"
    "impacts\nimpaired\nimperial\nimplement\nimplementation\nimplemented\nimplementing\nimplications\nimplied\nimplies\nimport\nimportance\n"
    "important\nimportantly\nimported\nimports\nimpose\nimposed\nimpossible\nimpressed\nimpression\nimpressive\nimprove\nimproved\n"
    "improvement\nimprovements\nimproving\nin\ninappropriate\ninbox\ninc\nincentive\nincentives\nincest\ninch\ninches\n"
    "incidence\nincident\nincidents\nincl\ninclude\nincluded\nincludes\nincluding\ninclusion\ninclusive\nincome\nincoming\n"
    "incomplete\nincorporate\nincorporated\nincorrect\nincrease\nincreased\nincreases\nincreasing\nincreasingly\nincredible\nincurred\nind\n"
    "indeed\nindependence\nindependent\nindependently\nindex\nindexed\nindexes\nindia\nindian\nindiana\nindianapolis\nindians\n"
    "indicate\nindicated\nindicates\nindicating\nindication\nindicator\nindicators\nindices\nindie\nindigenous\nindirect\nindividual\n"
    "individually\nindividuals\nindonesia\nindonesian\nindoor\ninduced\ninduction\nindustrial\nindustries\nindustry\ninexpensive\ninf\n"
    "infant\ninfants\ninfected\ninfection\ninfections\ninfectious\ninfinite\ninflation\ninfluence\ninfluenced\ninfluences\ninfo\n"
    "inform\ninformal\ninformation\ninformational\ninformative\ninformed\ninfrared\ninfrastructure\ninfringement\ning\ningredients\ninherit\n"
    "inherited\ninitial\ninitialize\ninitially\ninitiated\ninitiative\ninitiatives\ninjection\ninjured\ninjuries\ninjury\nink\n"
    "inkjet\ninline\ninn\ninner\ninnocent\ninnovation\ninnovations\ninnovative\ninns\ninput\ninputs\ninquire\n"
    "inquiries\ninquiry\nins\ninsects\ninsert\ninserted\ninsertion\ninside\ninsider\ninsight\ninsights\ninspection\n"
    "inspections\ninspector\ninspiration\ninspired\ninstall\ninstallation\ninstallations\ninstalled\ninstalling\ninstance\ninstances\ninstant\n"
    "instantly\ninstead\ninstitute\ninstitutes\ninstitution\ninstitutional\ninstitutions\ninstruction\ninstructional\ninstructions\ninstructor\ninstructors\n"
    "instrument\ninstrumental\ninstrumentation\ninstruments\ninsulation\ninsulin\ninsurance\ninsured\nint\nintake\ninteger\nintegral\n"
    "integrate\nintegrated\nintegrating\nintegration\nintegrity\nintel\nintellectual\nintelligence\nintelligent\nintend\nintended\nintense\n"
    "intensity\nintensive\nintent\nintention\ninter\ninteract\ninteraction\ninteractions\ninteractive\ninterest\ninterested\ninteresting\n"
    "interests\ninterface\ninterfaces\ninterference\ninterim\ninterior\nintermediate\ninternal\ninternational\ninternationally\ninternet\ninternship\n"
    "interpretation\ninterpreted\ninterpreter\ninterracial\nintersection\ninterstate\ninterval\nintervals\nintervention\ninterventions\ninterview\ninterviews\n"
    "intimate\nintl\ninto\nintranet\nintro\nintroduce\nintroduced\nintroduces\nintroducing\nintroduction\nintroductory\ninvalid\n"
    "invasion\ninvention\ninventory\ninvest\ninvestigate\ninvestigated\ninvestigation\ninvestigations\ninvestigator\ninvestigators\ninvesting\ninvestment\n"
    "investments\ninvestor\ninvestors\ninvisible\ninvision\ninvitation\ninvitations\ninvite\ninvited\ninvoice\ninvoke\ninvolve\n"
    "involved\ninvolvement\ninvolves\ninvolving\nio\nion\niowa\nip\nipaq\nipod\nips\nir\n"
    "ira\niran\niraq\niraqi\nirc\nireland\nirish\niron\nirrigation\nirs\nis\nisa\n"
    "isaac\nisbn\nislam\nislamic\nisland\nislands\nisle\niso\nisolated\nisolation\nisp\nisrael\n"
    "israeli\nissn\nissue\nissued\nissues\nist\nistanbul\nit\nitalia\nitalian\nitaliano\nitalic\n"
    "italy\nitem\nitems\niterate\nits\nitself\nitunes\niv\nivory\nix\nj\nja\n"
    "jack\njacket\njackets\njackie\njackson\njacksonville\njacob\njade\njaguar\njail\njake\njam\n"
    "jamaica\njames\njamie\njan\njane\njanet\njanuary\njapan\njapanese\njar\njason\njava\n"
    "javascript\njay\njazz\njc\njd\nje\njean\njeans\njeep\njeff\njefferson\njeffrey\n"
    "jelsoft\njennifer\njenny\njeremy\njerry\njersey\njerusalem\njesse\njessica\njesus\njet\njets\n"
    "jewel\njewellery\njewelry\njewish\njews\njill\njim\njimmy\njj\njm\njo\njoan\n"
    "job\njobs\njoe\njoel\njohn\njohnny\njohns\njohnson\njohnston\njoin\njoined\njoining\n"
    "joins\njoint\njoke\njokes\njon\njonathan\njones\njordan\njose\njoseph\njosh\njoshua\n"
    "journal\njournalism\njournalist\njournalists\njournals\njourney\njoy\njoyce\njp\njpeg\njpg\njr\n"
    "js\njuan\njudge\njudges\njudgment\njudicial\njudy\njuice\njul\njulia\njulian\njulie\n"
    "july\njump\njumping\njun\njunction\njune\njungle\njunior\njunk\njurisdiction\njury\njust\n"
    "justice\njustify\njustin\njuvenile\njvc\nk\nka\nkai\nkansas\nkaraoke\nkaren\nkarl\n"
    "karma\nkate\nkathy\nkatie\nkatrina\nkay\nkazakhstan\nkb\nkde\nkeen\nkeep\nkeeping\n"
    "keeps\nkeith\nkelkoo\nkelly\nken\nkennedy\nkenneth\nkenny\nkeno\nkent\nkentucky\nkenya\n"
    "kept\nkernel\nkerry\nkevin\nkey\nkeyboard\nkeyboards\nkeys\nkeyword\nkeywords\nkg\nkick\n"
    "kid\nkidney\nkids\nkijiji\nkill\nkilled\nkiller\nkilling\nkills\nkilometers\nkim\nkinase\n"
    "kind\nkinda\nkinds\nking\nkingdom\nkings\nkingston\nkirk\nkiss\nkissing\nkit\nkitchen\n"
    "kits\nkitty\nklein\nkm\nknee\nknew\nknife\nknight\nknights\nknit\nknitting\nknives\n"
    "knock\nknow\nknowing\nknowledge\nknowledgestorm\nknown\nknows\nko\nkodak\nkong\nkorea\nkorean\n"
    "kruger\nks\nkurt\nkuwait\nkw\nky\nkyle\nl\nla\nlab\nlabel\nlabeled\n"
    "labels\nlabor\nlaboratories\nlaboratory\nlabour\nlabs\nlace\nlack\nladder\nladen\nladies\nlady\n"
    "lafayette\nlaid\nlake\nlakes\nlamb\nlambda\nlamp\nlamps\nlan\nlancaster\nlance\nland\n"
    "landing\nlands\nlandscape\nlandscapes\nlane\nlanes\nlang\nlanguage\nlanguages\nlanka\nlaos\nlap\n"
    "laptop\nlaptops\nlarge\nlargely\nlarger\nlargest\nlarry\nlas\nlaser\nlast\nlasting\nlat\n"
    "late\nlately\nlater\nlatest\nlatex\nlatin\nlatina\nlatinas\nlatino\nlatitude\nlatter\nlatvia\n"
    "lauderdale\nlaugh\nlaughing\nlaunch\nlaunched\nlaunches\nlaundry\nlaura\nlauren\nlaw\nlawn\nlawrence\n"
    "laws\nlawsuit\nlawyer\nlawyers\nlay\nlayer\nlayers\nlayout\nlazy\nlb\nlbs\nlc\n"
    "lcd\nld\nle\nlead\nleader\nleaders\nleadership\nleading\nleads\nleaf\nleague\nlean\n"
    "learn\nlearned\nlearners\nlearning\nlease\nleasing\nleast\nleather\nleave\nleaves\nleaving\nlebanon\n"
    "lecture\nlectures\nled\nlee\nleeds\nleft\nleg\nlegacy\nlegal\nlegally\nlegend\nlegendary\n"
    "legends\nlegislation\nlegislative\nlegislature\nlegitimate\nlegs\nleisure\nlemon\nlen\nlender\nlenders\nlending\n"
    "length\nlens\nlenses\nleo\nleon\nleonard\nleone\nles\nlesbian\nlesbians\nleslie\nless\n"
    "lesser\nlesson\nlessons\nlet\nlets\nletter\nletters\nletting\nleu\nlevel\nlevels\nlevitra\n"
    "levy\nlewis\nlexington\nlexmark\nlexus\nlf\nlg\nli\nliabilities\nliability\nliable\nlib\n"
    "liberal\nliberia\nliberty\nlibrarian\nlibraries\nlibrary\nlibs\nlicence\nlicense\nlicensed\nlicenses\nlicensing\n"
    "licking\nlid\nlie\nliechtenstein\nlies\nlife\nlifestyle\nlifetime\nlift\nlight\nlightbox\nlighter\n"
    "lighting\nlightning\nlights\nlightweight\nlike\nliked\nlikelihood\nlikely\nlikes\nlikewise\nlil\nlime\n"
    "limit\nlimitation\nlimitations\nlimited\nlimiting\nlimits\nlimousines\nlincoln\nlinda\nlindsay\nline\nlinear\n"
    "lined\nlines\nlingerie\nlink\nlinked\nlinking\nlinks\nlinux\nlion\nlions\nlip\nlips\n"
    "liquid\nlisa\nlist\nlisted\nlisten\nlistening\nlisting\nlistings\nlistprice\nlists\nlit\nlite\n"
    "literacy\nliterally\nliterary\nliterature\nlithuania\nlitigation\nlittle\nlive\nlivecam\nlived\nliver\nliverpool\n"
    "lives\nlivesex\nlivestock\nliving\nliz\nll\nllc\nlloyd\nllp\nlm\nln\nlo\n"
    "load\nloaded\nloading\nloads\nloan\nloans\nlobby\nloc\nlocal\nlocale\nlocalize\nlocally\n"
    "locate\nlocated\nlocation\nlocations\nlocator\nlock\nlocked\nlocking\nlocks\nlodge\nlodging\nlog\n"
    "logan\nlogged\nlogging\nlogic\nlogical\nlogin\nlogistics\nlogitech\nlogo\nlogos\nlogs\nlol\n"
    "lolita\nlondon\nlone\nlonely\nlong\nlonger\nlongest\nlongitude\nlook\nlooked\nlooking\nlooks\n"
    "looksmart\nlookup\nloop\nloops\nloose\nlopez\nlord\nlos\nlose\nlosing\nloss\nlosses\n"
    "lost\nlot\nlots\nlottery\nlotus\nlou\nloud\nlouis\nlouise\nlouisiana\nlouisville\nlounge\n"
    "love\nloved\nlovely\nlover\nlovers\nloves\nloving\nlow\nlower\nlowest\nlows\nlp\n"
    "ls\nlt\nltd\nlu\nlucas\nlucia\nluck\nlucky\nlucy\nluggage\nluis\nluke\n"
    "lunch\nlung\nluther\nluxembourg\nluxury\nlycos\nlying\nlynn\nlyric\nlyrics\nm\nma\n"
    "mac\nmacedonia\nmachine\nmachinery\nmachines\nmacintosh\nmacro\nmacromedia\nmad\nmadagascar\nmade\nmadison\n"
    "madness\nmadonna\nmadrid\nmae\nmag\nmagazine\nmagazines\nmagic\nmagical\nmagnet\nmagnetic\nmagnificent\n"
    "magnitude\nmai\nmaiden\nmail\nmailed\nmailing\nmailman\nmails\nmailto\nmain\nmaine\nmainland\n"
    "mainly\nmainstream\nmaintain\nmaintained\nmaintaining\nmaintains\nmaintenance\nmajor\nmajority\nmake\nmaker\nmakers\n"
    "makes\nmakeup\nmaking\nmalawi\nmalaysia\nmaldives\nmale\nmales\nmali\nmall\nmalpractice\nmalta\n"
    "mambo\nman\nmanage\nmanaged\nmanagement\nmanager\nmanagers\nmanaging\nmanchester\nmandate\nmandatory\nmanga\n"
    "manhattan\nmanitoba\nmanner\nmanor\nmanual\nmanually\nmanuals\nmanufacture\nmanufactured\nmanufacturer\nmanufacturers\nmanufacturing\n"
    "many\nmap\nmaple\nmapping\nmaps\nmar\nmarathon\nmarble\nmarc\nmarch\nmarco\nmarcus\n"
    "mardi\nmargaret\nmargin\nmaria\nmariah\nmarie\nmarijuana\nmarilyn\nmarina\nmarine\nmario\nmarion\n"
    "maritime\nmark\nmarked\nmarker\nmarkers\nmarket\nmarketing\nmarketplace\nmarkets\nmarking\nmarks\nmarriage\n"
    "married\nmarriott\nmars\nmarsh\nmarshall\nmart\nmartha\nmartial\nmartin\nmarvel\nmary\nmaryland\n"
    "mas\nmask\nmason\nmass\nmassachusetts\nmassage\nmassive\nmaster\nmastercard\nmasters\nmasturbating\nmasturbation\n"
    "mat\nmatch\nmatched\nmatches\nmatching\nmate\nmaterial\nmaterials\nmaternity\nmath\nmathematical\nmathematics\n"
    "mating\nmatrix\nmats\nmatt\nmatter\nmatters\nmatthew\nmattress\nmature\nmaui\nmauritius\nmax\n"
    "maximize\nmaximum\nmay\nmaybe\nmayor\nmazda\nmb\nmba\nmc\nmcdonald\nmd\nme\n"
    "meal\nmeals\nmean\nmeaning\nmeaningful\nmeans\nmeant\nmeanwhile\nmeasure\nmeasured\nmeasurement\nmeasurements\n"
    "measures\nmeasuring\nmeat\nmechanical\nmechanics\nmechanism\nmechanisms\nmed\nmedal\nmedia\nmedian\nmediawiki\n"
    "medicaid\nmedical\nmedicare\nmedication\nmedications\nmedicine\nmedicines\nmedieval\nmeditation\nmediterranean\nmedium\nmedline\n"
    "meet\nmeeting\nmeetings\nmeets\nmeetup\nmega\nmel\nmelbourne\nmelissa\nmem\nmember\nmembers\n"
    "membership\nmembrane\nmemo\nmemorabilia\nmemorial\nmemories\nmemory\nmemphis\nmen\nmens\nment\nmental\n"
    "mention\nmentioned\nmentor\nmenu\nmenus\nmercedes\nmerchandise\nmerchant\nmerchants\nmercury\nmercy\nmere\n"
    "merely\nmerge\nmerger\nmerit\nmerry\nmesa\nmesh\nmess\nmessage\nmessages\nmessaging\nmessenger\n"
    "met\nmeta\nmetabolism\nmetadata\nmetal\nmetallic\nmetallica\nmetals\nmeter\nmeters\nmethod\nmethodology\n"
    "methods\nmetres\nmetric\nmetro\nmetropolitan\nmexican\nmexico\nmeyer\nmf\nmg\nmh\nmhz\n"
    "mi\nmia\nmiami\nmic\nmice\nmichael\nmichel\nmichelle\nmichigan\nmicro\nmicrophone\nmicrosoft\n"
    "microwave\nmid\nmiddle\nmidi\nmidlands\nmidnight\nmidwest\nmight\nmighty\nmigration\nmike\nmil\n"
    "milan\nmild\nmile\nmileage\nmiles\nmilf\nmilfhunter\nmilfs\nmilitary\nmilk\nmill\nmillennium\n"
    "miller\nmillion\nmillions\nmills\nmilton\nmilwaukee\nmime\nmin\nmind\nminds\nmine\nmineral\n"
    "minerals\nmines\nmini\nminiature\nminimal\nminimize\nminimum\nmining\nminister\nministers\nministries\nministry\n"
    "minneapolis\nminnesota\nminolta\nminor\nminority\nmins\nmint\nminus\nminute\nminutes\nmiracle\nmirror\n"
    "mirrors\nmisc\nmiscellaneous\nmiss\nmissed\nmissile\nmissing\nmission\nmissions\nmississippi\nmissouri\nmistake\n"
    "mistakes\nmistress\nmit\nmitchell\nmitsubishi\nmix\nmixed\nmixer\nmixing\nmixture\nmj\nml\n"
    "mlb\nmls\nmm\nmn\nmo\nmobile\nmobiles\nmobility\nmod\nmode\nmodel\nmodeling\n"
    "modelling\nmodels\nmodem\nmodems\nmoderate\nmoderator\nmoderators\nmodern\nmodes\nmodification\nmodifications\nmodified\n"
    "modify\nmods\nmodular\nmodule\nmodules\nmoisture\nmold\nmoldova\nmolecular\nmolecules\nmom\nmoment\n"
    "moments\nmomentum\nmoms\nmon\nmonaco\nmonday\nmonetary\nmoney\nmongolia\nmonica\nmonitor\nmonitored\n"
    "monitoring\nmonitors\nmonkey\nmono\nmonroe\nmonster\nmonsters\nmontana\nmonte\nmontgomery\nmonth\nmonthly\n"
    "months\nmontreal\nmood\nmoon\nmoore\nmoral\nmore\nmoreover\nmorgan\nmorning\nmorocco\nmorris\n"
    "morrison\nmortality\nmortgage\nmortgages\nmoscow\nmoses\nmoss\nmost\nmostly\nmotel\nmotels\nmother\n"
    "motherboard\nmothers\nmotion\nmotivated\nmotivation\nmotor\nmotorcycle\nmotorcycles\nmotorola\nmotors\nmount\nmountain\n"
    "mountains\nmounted\nmounting\nmounts\nmouse\nmouth\nmove\nmoved\nmovement\nmovements\nmovers\nmoves\n"
    "movie\nmovies\nmoving\nmozambique\nmozilla\nmp\nmpeg\nmpegs\nmpg\nmph\nmr\nmrna\n"
    "mrs\nms\nmsg\nmsgid\nmsgstr\nmsie\nmsn\nmt\nmtv\nmu\nmuch\nmud\n"
    "mug\nmulti\nmultimedia\nmultiple\nmumbai\nmunich\nmunicipal\nmunicipality\nmurder\nmurphy\nmurray\nmuscle\n"
    "muscles\nmuseum\nmuseums\nmusic\nmusical\nmusician\nmusicians\nmuslim\nmuslims\nmust\nmustang\nmutual\n"
    "muze\nmv\nmw\nmx\nmy\nmyanmar\nmyers\nmyrtle\nmyself\nmysimon\nmyspace\nmysql\n"
    "mysterious\nmystery\nmyth\nn\nna\nnail\nnails\nnaked\nnam\nname\nnamed\nnamely\n"
    "names\nnamespace\nnamibia\nnancy\nnano\nnaples\nnarrative\nnarrow\nnasa\nnascar\nnasdaq\nnashville\n"
    "nasty\nnat\nnathan\nnation\nnational\nnationally\nnations\nnationwide\nnative\nnato\nnatural\nnaturally\n"
    "naturals\nnature\nnaughty\nnav\nnaval\nnavigate\nnavigation\nnavigator\nnavy\nnb\nnba\nnbc\n"
    "nc\nncaa\nnd\nne\nnear\nnearby\nnearest\nnearly\nnebraska\nnec\nnecessarily\nnecessary\n"
    "necessity\nneck\nnecklace\nneed\nneeded\nneedle\nneeds\nnegative\nnegotiation\nnegotiations\nneighbor\nneighborhood\n"
    "neighbors\nneil\nneither\nnelson\nneo\nneon\nnepal\nnerve\nnervous\nnest\nnested\nnet\n"
    "netherlands\nnetscape\nnetwork\nnetworking\nnetworks\nneural\nneutral\nnevada\nnever\nnevertheless\nnew\nnewark\n"
    "newbie\nnewcastle\nnewer\nnewest\nnewfoundland\nnewly\nnewman\nnewport\nnews\nnewsletter\nnewsletters\nnewspaper\n"
    "newspapers\nnewton\nnext\nnextel\nnfl\nng\nnh\nnhl\nnhs\nni\nniagara\nnicaragua\n"
    "nice\nnicholas\nnick\nnickel\nnickname\nnicole\nniger\nnigeria\nnight\nnightlife\nnightmare\nnights\n"
    "nike\nnikon\nnil\nnine\nnintendo\nnipple\nnipples\nnirvana\nnissan\nnitrogen\nnj\nnl\n"
    "nm\nnn\nno\nnoble\nnobody\nnode\nnodes\nnoise\nnokia\nnominated\nnomination\nnominations\n"
    "non\nnone\nnonprofit\nnoon\nnor\nnorfolk\nnorm\nnormal\nnormally\nnorman\nnorth\nnortheast\n"
    "northern\nnorthwest\nnorton\nnorway\nnorwegian\nnose\nnot\nnote\nnotebook\nnotebooks\nnoted\nnotes\n"
    "nothing\nnotice\nnoticed\nnotices\nnotification\nnotifications\nnotified\nnotify\nnotion\nnotre\nnottingham\nnov\n"
    "nova\nnovel\nnovels\nnovelty\nnovember\nnow\nnowhere\nnp\nnr\nns\nnsw\nnt\n"
    "ntsc\nnu\nnuclear\nnude\nnudist\nnudity\nnuke\nnull\nnumber\nnumbers\nnumeric\nnumerical\n"
    "numerous\nnurse\nnursery\nnurses\nnursing\nnut\nnutrition\nnutritional\nnuts\nnutten\nnv\nnvidia\n"
    "nw\nny\nnyc\nnylon\nnz\no\noak\noakland\noaks\noasis\nob\nobesity\n"
    "obituaries\nobj\nobject\nobjective\nobjectives\nobjects\nobligation\nobligations\nobservation\nobservations\nobserve\nobserved\n"
    "observer\nobtain\nobtained\nobtaining\nobvious\nobviously\noc\noccasion\noccasional\noccasionally\noccasions\noccupation\n"
    "occupational\noccupations\noccupied\noccur\noccurred\noccurrence\noccurring\noccurs\nocean\noclc\noct\noctober\n"
    "odd\nodds\noe\noecd\noem\nof\noff\noffense\noffensive\noffer\noffered\noffering\n"
    "offerings\noffers\noffice\nofficer\nofficers\noffices\nofficial\nofficially\nofficials\noffline\noffset\noffshore\n"
    "often\nog\noh\nohio\noil\noils\nok\nokay\noklahoma\nol\nold\nolder\n"
    "oldest\nolive\noliver\nolympic\nolympics\nolympus\nom\nomaha\noman\nomega\nomissions\non\n"
    "once\none\nones\nongoing\nonion\nonline\nonly\nons\nontario\nonto\noo\nooo\n"
    "oops\nop\nopen\nopened\nopening\nopenings\nopens\nopera\noperate\noperated\noperates\noperating\n"
    "operation\noperational\noperations\noperator\noperators\nopinion\nopinions\nopponent\nopponents\nopportunities\nopportunity\nopposed\n"
    "opposite\nopposition\nopt\noptical\noptics\noptimal\noptimization\noptimize\noptimum\noption\noptional\noptions\n"
    "or\noracle\noral\norange\norbit\norchestra\norder\nordered\nordering\norders\nordinance\nordinary\n"
    "oregon\norg\norgan\norganic\norganisation\norganisations\norganised\norganisms\norganization\norganizational\norganizations\norganize\n"
    "organized\norganizer\norganizing\norgasm\norgy\noriental\norientation\noriented\norigin\noriginal\noriginally\norigins\n"
    "orlando\norleans\nos\noscar\not\nother\nothers\notherwise\nottawa\nou\nought\nour\n"
    "ours\nourselves\nout\noutcome\noutcomes\noutdoor\noutdoors\nouter\noutlet\noutlets\noutline\noutlined\n"
    "outlook\noutput\noutputs\noutreach\noutside\noutsourcing\noutstanding\noval\noven\nover\noverall\novercome\n"
    "overhead\novernight\noverseas\noverview\nowen\nown\nowned\nowner\nowners\nownership\nowns\noxford\n"
    "oxide\noxygen\noz\nozone\np\npa\npac\npace\npacific\npack\npackage\npackages\n"
    "packaging\npackard\npacked\npacket\npackets\npacking\npacks\npad\npads\npage\npages\npaid\n"
    "pain\npainful\npaint\npaintball\npainted\npainting\npaintings\npair\npairs\npakistan\npal\npalace\n"
    "pale\npalestine\npalestinian\npalette\npalm\npalmer\npam\npamela\npan\npanama\npanasonic\npanel\n"
    "panels\npanic\npanties\npants\npantyhose\npaper\npaperback\npaperbacks\npapers\npapua\npar\npara\n"
    "parade\nparadise\nparagraph\nparagraphs\nparaguay\nparallel\nparameter\nparameters\nparcel\nparent\nparental\nparenting\n"
    "parents\nparis\nparish\npark\nparker\nparking\nparks\nparliament\nparliamentary\nparse\npart\npartial\n"
    "partially\nparticipant\nparticipants\nparticipate\nparticipated\nparticipating\nparticipation\nparticle\nparticles\nparticular\nparticularly\nparties\n"
    "partition\npartly\npartner\npartners\npartnership\npartnerships\nparts\nparty\npas\npaso\npass\npassage\n"
    "passed\npassenger\npassengers\npasses\npassing\npassion\npassive\npassport\npassword\npasswords\npast\npasta\n"
    "paste\npastor\npat\npatch\npatches\npatent\npatents\npath\npathology\npaths\npatient\npatients\n"
    "patio\npatricia\npatrick\npatrol\npattern\npatterns\npaul\npavilion\npaxil\npay\npayable\npayday\n"
    "paying\npayment\npayments\npaypal\npayroll\npays\npb\npc\npci\npcs\npct\npd\n"
    "pda\npdas\npdf\npdt\npe\npeace\npeaceful\npeak\npearl\npeas\npediatric\npee\n"
    "peeing\npeer\npeers\npen\npenalties\npenalty\npencil\npendant\npending\npenetration\npenguin\npeninsula\n"
    "penis\npenn\npennsylvania\npenny\npens\npension\npensions\npentium\npeople\npeoples\npepper\nper\n"
    "perceived\npercent\npercentage\nperception\nperfect\nperfectly\nperform\nperformance\nperformances\nperformed\nperformer\nperforming\n"
    "performs\nperfume\nperhaps\nperiod\nperiodic\nperiodically\nperiods\nperipheral\nperipherals\nperl\npermalink\npermanent\n"
    "permission\npermissions\npermit\npermits\npermitted\nperry\npersian\npersistent\nperson\npersonal\npersonality\npersonalized\n"
    "personally\npersonals\npersonnel\npersons\nperspective\nperspectives\nperth\nperu\npest\npet\npete\npeter\n"
    "petersburg\npeterson\npetite\npetition\npetroleum\npets\npf\npg\npgp\nph\nphantom\npharmaceutical\n"
    "pharmaceuticals\npharmacies\npharmacology\npharmacy\nphase\nphases\nphd\nphenomenon\nphentermine\nphi\nphil\nphiladelphia\n"
    "philip\nphilippines\nphilips\nphillips\nphilosophy\nphoenix\nphone\nphones\nphoto\nphotograph\nphotographer\nphotographers\n"
    "photographic\nphotographs\nphotography\nphotos\nphotoshop\nphp\nphpbb\nphrase\nphrases\nphys\nphysical\nphysically\n"
    "physician\nphysicians\nphysics\nphysiology\npi\npiano\npic\npichunter\npick\npicked\npicking\npicks\n"
    "pickup\npicnic\npics\npicture\npictures\npie\npiece\npieces\npierce\npierre\npig\npike\n"
    "pill\npillow\npills\npilot\npin\npine\nping\npink\npins\npioneer\npipe\npipeline\n"
    "pipes\npirates\npiss\npissing\npit\npitch\npittsburgh\npix\npixel\npixels\npizza\npj\n"
    "pk\npl\nplace\nplaced\nplacement\nplaces\nplacing\nplain\nplains\nplaintiff\nplan\nplane\n"
    "planes\nplanet\nplanets\nplanned\nplanner\nplanners\nplanning\nplans\nplant\nplants\nplasma\nplastic\n"
    "plastics\nplate\nplates\nplatform\nplatforms\nplatinum\nplay\nplayback\nplayboy\nplayed\nplayer\nplayers\n"
    "playing\nplaylist\nplays\nplaystation\nplaza\nplc\npleasant\nplease\npleased\npleasure\npledge\nplenty\n"
    "plot\nplots\nplug\nplugin\nplugins\nplumbing\nplus\nplymouth\npm\npmc\npmid\npn\n"
    "po\npocket\npockets\npod\npodcast\npodcasts\npoem\npoems\npoet\npoetry\npoint\npointed\n"
    "pointer\npointing\npoints\npoison\npokemon\npoker\npoland\npolar\npole\npolice\npolicies\npolicy\n"
    "polish\npolished\npolitical\npoliticians\npolitics\npoll\npolls\npollution\npolo\npoly\npolyester\npolymer\n"
    "polyphonic\npond\npontiac\npool\npools\npoor\npop\npope\npopular\npopularity\npopulation\npopulations\n"
    "por\nporcelain\npork\nporn\nporno\nporsche\nport\nportable\nportal\nporter\nportfolio\nportion\n"
    "portions\nportland\nportrait\nportraits\nports\nportsmouth\nportugal\nportuguese\npos\npose\nposing\nposition\n"
    "positioning\npositions\npositive\npossess\npossession\npossibilities\npossibility\npossible\npossibly\npost\npostage\npostal\n"
    "postcard\npostcards\nposted\nposter\nposters\nposting\npostings\npostposted\nposts\npot\npotato\npotatoes\n"
    "potential\npotentially\npotter\npottery\npoultry\npound\npounds\npour\npoverty\npowder\npowell\npower\n"
    "powered\npowerful\npowerpoint\npowers\npowerseller\npp\nppc\nppm\npr\npractical\npractice\npractices\n"
    "practitioner\npractitioners\nprague\nprairie\npraise\npray\nprayer\nprayers\npre\npreceding\nprecious\nprecipitation\n"
    "precise\nprecisely\nprecision\npredict\npredicted\nprediction\npredictions\nprefer\npreference\npreferences\npreferred\nprefers\n"
    "prefix\npregnancy\npregnant\npreliminary\npremier\npremiere\npremises\npremium\nprep\nprepaid\npreparation\nprepare\n"
    "prepared\npreparing\nprerequisite\nprescribed\nprescription\npresence\npresent\npresentation\npresentations\npresented\npresenting\npresently\n"
    "presents\npreservation\npreserve\npresident\npresidential\npress\npressed\npressing\npressure\npreston\npretty\nprev\n"
    "prevent\npreventing\nprevention\npreview\npreviews\nprevious\npreviously\nprice\npriced\nprices\npricing\npride\n"
    "priest\nprimarily\nprimary\nprime\nprince\nprincess\nprinceton\nprincipal\nprinciple\nprinciples\nprint\nprintable\n"
    "printed\nprinter\nprinters\nprinting\nprints\nprior\npriorities\npriority\nprison\nprisoner\nprisoners\nprivacy\n"
    "private\nprivilege\nprivileges\nprix\nprize\nprizes\npro\nprobability\nprobably\nprobe\nproblem\nproblems\n"
    "proc\nprocedure\nprocedures\nproceed\nproceeding\nproceedings\nproceeds\nprocess\nprocessed\nprocesses\nprocessing\nprocessor\n"
    "processors\nprocurement\nproduce\nproduced\nproducer\nproducers\nproduces\nproducing\nproduct\nproduction\nproductions\nproductive\n"
    "productivity\nproducts\nprofession\nprofessional\nprofessionals\nprofessor\nprofile\nprofiles\nprofit\nprofits\nprogram\nprogramme\n"
    "programmer\nprogrammers\nprogrammes\nprogramming\nprograms\nprogress\nprogressive\nprohibited\nproject\nprojected\nprojection\nprojector\n"
    "projectors\nprojects\nprominent\npromise\npromised\npromises\npromising\npromo\npromote\npromoted\npromotes\npromoting\n"
    "promotion\npromotional\npromotions\nprompt\npromptly\nproof\npropecia\nproper\nproperly\nproperties\nproperty\nprophet\n"
    "proportion\nproposal\nproposals\npropose\nproposed\nproposition\nproprietary\npros\nprospect\nprospective\nprospects\nprostate\n"
    "prostores\nprot\nprotect\nprotected\nprotecting\nprotection\nprotective\nprotein\nproteins\nprotest\nprotocol\nprotocols\n"
    "prototype\nproud\nproudly\nprove\nproved\nproven\nprovide\nprovided\nprovidence\nprovider\nproviders\nprovides\n"
    "providing\nprovince\nprovinces\nprovincial\nprovision\nprovisions\nproxy\nprozac\nps\npsi\npsp\npst\n"
    "psychiatry\npsychological\npsychology\npt\npts\npty\npub\npublic\npublication\npublications\npublicity\npublicly\n"
    "publish\npublished\npublisher\npublishers\npublishing\npubmed\npubs\npuerto\npull\npulled\npulling\npulse\n"
    "pump\npumps\npunch\npunishment\npunk\npupils\npuppy\npurchase\npurchased\npurchases\npurchasing\npure\n"
    "purple\npurpose\npurposes\npurse\npursuant\npursue\npursuit\npush\npushed\npushing\npussy\nput\n"
    "puts\nputting\npuzzle\npuzzles\npvc\npython\nq\nqatar\nqc\nqld\nqt\nqty\n"
    "quad\nqualification\nqualifications\nqualified\nqualify\nqualifying\nqualities\nquality\nquantitative\nquantities\nquantity\nquantum\n"
    "quarter\nquarterly\nquarters\nque\nquebec\nqueen\nqueens\nqueensland\nqueries\nquery\nquest\nquestion\n"
    "questionnaire\nquestions\nqueue\nqui\nquick\nquickly\nquiet\nquilt\nquit\nquite\nquiz\nquizzes\n"
    "quotations\nquote\nquoted\nquotes\nr\nra\nrabbit\nrace\nraces\nrachel\nracial\nracing\n"
    "rack\nracks\nradar\nradiation\nradical\nradio\nradios\nradius\nrage\nraid\nrail\nrailroad\n"
    "railway\nrain\nrainbow\nraise\nraised\nraises\nraising\nraleigh\nrally\nralph\nram\nran\n"
    "ranch\nrand\nrandom\nrandy\nrange\nranger\nrangers\nranges\nranging\nrank\nranked\nranking\n"
    "rankings\nranks\nrap\nrape\nrapid\nrapidly\nrapids\nrare\nrarely\nrat\nrate\nrated\n"
    "rates\nrather\nrating\nratings\nratio\nrational\nratios\nrats\nraw\nray\nraymond\nrays\n"
    "rb\nrc\nrca\nrd\nre\nreach\nreached\nreaches\nreaching\nreaction\nreactions\nread\n"
    "reader\nreaders\nreadily\nreading\nreadings\nreads\nready\nreal\nrealistic\nreality\nrealize\nrealized\n"
    "really\nrealm\nrealtor\nrealtors\nrealty\nrear\nreason\nreasonable\nreasonably\nreasoning\nreasons\nrebate\n"
    "rebates\nrebecca\nrebel\nrebound\nrec\nrecall\nreceipt\nreceive\nreceived\nreceiver\nreceivers\nreceives\n"
    "receiving\nrecent\nrecently\nreception\nreceptor\nreceptors\nrecipe\nrecipes\nrecipient\nrecipients\nrecognised\nrecognition\n"
    "recognize\nrecognized\nrecommend\nrecommendation\nrecommendations\nrecommended\nrecommends\nreconstruction\nrecord\nrecorded\nrecorder\nrecorders\n"
    "recording\nrecordings\nrecords\nrecover\nrecovered\nrecovery\nrecreation\nrecreational\nrecruiting\nrecruitment\nrecycling\nred\n"
    "redeem\nredhead\nreduce\nreduced\nreduces\nreducing\nreduction\nreductions\nreed\nreef\nreel\nref\n"
    "refer\nreference\nreferenced\nreferences\nreferral\nreferrals\nreferred\nreferring\nrefers\nrefinance\nrefine\nrefined\n"
    "reflect\nreflected\nreflection\nreflections\nreflects\nreform\nreforms\nrefresh\nrefrigerator\nrefugees\nrefund\nrefurbished\n"
    "refuse\nrefused\nreg\nregard\nregarded\nregarding\nregardless\nregards\nreggae\nregime\nregion\nregional\n"
    "regions\nregister\nregistered\nregistrar\nregistration\nregistry\nregression\nregular\nregularly\nregulated\nregulation\nregulations\n"
    "regulatory\nrehab\nrehabilitation\nreid\nreject\nrejected\nrelate\nrelated\nrelates\nrelating\nrelation\nrelations\n"
    "relationship\nrelationships\nrelative\nrelatively\nrelatives\nrelax\nrelaxation\nrelay\nrelease\nreleased\nreleases\nrelevance\n"
    "relevant\nreliability\nreliable\nreliance\nrelief\nreligion\nreligions\nreligious\nreload\nrelocation\nrely\nrelying\n"
    "remain\nremainder\nremained\nremaining\nremains\nremark\nremarkable\nremarks\nremedies\nremedy\nremember\nremembered\n"
    "remind\nreminder\nremix\nremote\nremovable\nremoval\nremove\nremoved\nremoving\nrenaissance\nrender\nrendered\n"
    "rendering\nrenew\nrenewable\nrenewal\nreno\nrent\nrental\nrentals\nrep\nrepair\nrepairs\nrepeat\n"
    "repeated\nreplace\nreplaced\nreplacement\nreplacing\nreplica\nreplication\nreplied\nreplies\nreply\nreport\nreported\n"
    "reporter\nreporters\nreporting\nreports\nrepository\nrepresent\nrepresentation\nrepresentations\nrepresentative\nrepresentatives\nrepresented\nrepresenting\n"
    "represents\nreprint\nreprints\nreproduce\nreproduced\nreproduction\nreproductive\nrepublic\nrepublican\nrepublicans\nreputation\nrequest\n"
    "requested\nrequesting\nrequests\nrequire\nrequired\nrequirement\nrequirements\nrequires\nrequiring\nres\nrescue\nresearch\n"
    "researcher\nresearchers\nreseller\nreservation\nreservations\nreserve\nreserved\nreserves\nreservoir\nreset\nresidence\nresident\n"
    "residential\nresidents\nresist\nresistance\nresistant\nresolution\nresolutions\nresolve\nresolved\nresort\nresorts\nresource\n"
    "resources\nrespect\nrespected\nrespective\nrespectively\nrespiratory\nrespond\nresponded\nrespondent\nrespondents\nresponding\nresponse\n"
    "responses\nresponsibilities\nresponsibility\nresponsible\nrest\nrestaurant\nrestaurants\nrestoration\nrestore\nrestored\nrestrict\nrestricted\n"
    "restriction\nrestrictions\nrestructuring\nresult\nresulted\nresulting\nresults\nresume\nresumes\nretail\nretailer\nretailers\n"
    "retain\nretained\nretention\nretired\nretirement\nretreat\nretrieval\nretrieve\nretrieved\nretro\nreturn\nreturned\n"
    "returning\nreturns\nreunion\nreuters\nrev\nreveal\nrevealed\nreveals\nrevelation\nrevenge\nrevenue\nrevenues\n"
    "reverse\nreview\nreviewed\nreviewer\nreviewing\nreviews\nrevised\nrevision\nrevisions\nrevolution\nrevolutionary\nreward\n"
    "rewards\nreynolds\nrf\nrfc\nrg\nrh\nrhode\nrhythm\nri\nribbon\nrica\nrice\n"
    "rich\nrichard\nrichards\nrichardson\nrichmond\nrick\nricky\nrico\nrid\nride\nrider\nriders\n"
    "rides\nridge\nriding\nright\nrights\nrim\nring\nrings\nringtone\nringtones\nrio\nrip\n"
    "ripe\nrise\nrising\nrisk\nrisks\nriver\nrivers\nriverside\nrj\nrl\nrm\nrn\n"
    "rna\nro\nroad\nroads\nrob\nrobbie\nrobert\nroberts\nrobertson\nrobin\nrobinson\nrobot\n"
    "robots\nrobust\nrochester\nrock\nrocket\nrocks\nrocky\nrod\nroger\nrogers\nroland\nrole\n"
    "roles\nroll\nrolled\nroller\nrolling\nrolls\nrom\nroman\nromance\nromania\nromantic\nrome\n"
    "ron\nronald\nroof\nroom\nroommate\nroommates\nrooms\nroot\nroots\nrope\nrosa\nrose\n"
    "roses\nross\nroster\nrotary\nrotation\nrouge\nrough\nroughly\nroulette\nround\nrounds\nroute\n"
    "router\nrouters\nroutes\nroutine\nroutines\nrouting\nrover\nrow\nrows\nroy\nroyal\nroyalty\n"
    "rp\nrpg\nrpm\nrr\nrrp\nrs\nrss\nrt\nru\nrubber\nruby\nrug\n"
    "rugby\nrugs\nrule\nruled\nrules\nruling\nrun\nrunner\nrunning\nruns\nruntime\nrural\n"
    "rush\nrussell\nrussia\nrussian\nruth\nrv\nrw\nrwanda\nrx\nryan\ns\nsa\n"
    "sacramento\nsacred\nsacrifice\nsad\nsaddam\nsafari\nsafe\nsafely\nsafer\nsafety\nsage\nsagem\n"
    "said\nsail\nsailing\nsaint\nsaints\nsake\nsalad\nsalaries\nsalary\nsale\nsalem\nsales\n"
    "sally\nsalmon\nsalon\nsalt\nsalvador\nsalvation\nsam\nsamba\nsame\nsamoa\nsample\nsamples\n"
    "sampling\nsamsung\nsamuel\nsan\nsand\nsandra\nsandwich\nsandy\nsans\nsanta\nsanyo\nsao\n"
    "sap\nsapphire\nsara\nsarah\nsas\nsaskatchewan\nsat\nsatellite\nsatin\nsatisfaction\nsatisfactory\nsatisfied\n"
    "satisfy\nsaturday\nsaturn\nsauce\nsaudi\nsavage\nsavannah\nsave\nsaved\nsaver\nsaves\nsaving\n"
    "savings\nsaw\nsay\nsaying\nsays\nsb\nsbjct\nsc\nscale\nscales\nscan\nscanned\n"
    "scanner\nscanners\nscanning\nscared\nscary\nscenario\nscenarios\nscene\nscenes\nscenic\nschedule\nscheduled\n"
    "schedules\nscheduling\nschema\nscheme\nschemes\nscholar\nscholars\nscholarship\nscholarships\nschool\nschools\nsci\n"
    "science\nsciences\nscientific\nscientist\nscientists\nscoop\nscope\nscore\nscored\nscores\nscoring\nscotia\n"
    "scotland\nscott\nscottish\nscout\nscratch\nscreen\nscreening\nscreens\nscreensaver\nscreensavers\nscreenshot\nscreenshots\n"
    "screw\nscript\nscripting\nscripts\nscroll\nscsi\nscuba\nsculpture\nsd\nse\nsea\nseafood\n"
    "seal\nsealed\nsean\nsearch\nsearched\nsearches\nsearching\nseas\nseason\nseasonal\nseasons\nseat\n"
    "seating\nseats\nseattle\nsec\nsecond\nsecondary\nseconds\nsecret\nsecretariat\nsecretary\nsecrets\nsection\n"
    "sections\nsector\nsectors\nsecure\nsecured\nsecurely\nsecurities\nsecurity\nsee\nseed\nseeds\nseeing\n"
    "seek\nseeker\nseekers\nseeking\nseeks\nseem\nseemed\nseems\nseen\nsees\nsega\nsegment\n"
    "segments\nselect\nselected\nselecting\nselection\nselections\nselective\nself\nsell\nseller\nsellers\nselling\n"
    "sells\nsemester\nsemi\nsemiconductor\nseminar\nseminars\nsen\nsenate\nsenator\nsenators\nsend\nsender\n"
    "sending\nsends\nsenegal\nsenior\nseniors\nsense\nsensitive\nsensitivity\nsensor\nsensors\nsent\nsentence\n"
    "sentences\nseo\nsep\nseparate\nseparated\nseparately\nseparation\nsept\nseptember\nseq\nsequence\nsequences\n"
    "ser\nserbia\nserial\nseries\nserious\nseriously\nserum\nserve\nserved\nserver\nservers\nserves\n"
    "service\nservices\nserving\nsession\nsessions\nset\nsets\nsetting\nsettings\nsettle\nsettled\nsettlement\n"
    "setup\nseven\nseventh\nseveral\nsevere\nsewing\nsex\nsexcam\nsexo\nsexual\nsexuality\nsexually\n"
    "sexy\nsf\nsg\nsh\nshade\nshades\nshadow\nshadows\nshaft\nshake\nshakespeare\nshakira\n"
    "shall\nshame\nshanghai\nshannon\nshape\nshaped\nshapes\nshare\nshared\nshareholders\nshares\nshareware\n"
    "sharing\nshark\nsharon\nsharp\nshaved\nshaw\nshe\nshed\nsheep\nsheer\nsheet\nsheets\n"
    "sheffield\nshelf\nshell\nshelter\nshemale\nshemales\nshepherd\nsheriff\nsherman\nshield\nshift\nshine\n"
    "ship\nshipment\nshipments\nshipped\nshipping\nships\nshirt\nshirts\nshit\nshock\nshoe\nshoes\n"
    "shoot\nshooting\nshop\nshopper\nshoppers\nshopping\nshops\nshopzilla\nshore\nshort\nshortcuts\nshorter\n"
    "shortly\nshorts\nshot\nshots\nshould\nshoulder\nshow\nshowcase\nshowed\nshower\nshowers\nshowing\n"
    "shown\nshows\nshowtimes\nshuffle\nshut\nshuttle\nsi\nsic\nsick\nside\nsides\nsie\n"
    "siemens\nsierra\nsig\nsight\nsigma\nsign\nsignal\nsignals\nsignature\nsignatures\nsigned\nsignificance\n"
    "significant\nsignificantly\nsigning\nsigns\nsignup\nsilence\nsilent\nsilicon\nsilk\nsilly\nsilver\nsim\n"
    "similar\nsimilarly\nsimon\nsimple\nsimplified\nsimply\nsimpson\nsimpsons\nsims\nsimulation\nsimulations\nsimultaneously\n"
    "sin\nsince\nsing\nsingapore\nsinger\nsingh\nsinging\nsingle\nsingles\nsink\nsip\nsir\n"
    "sister\nsisters\nsit\nsite\nsitemap\nsites\nsitting\nsituated\nsituation\nsituations\nsix\nsixth\n"
    "size\nsized\nsizes\nsk\nskating\nski\nskiing\nskill\nskilled\nskills\nskin\nskins\n"
    "skip\nskirt\nskirts\nsku\nsky\nskype\nsl\nslave\nsleep\nsleeping\nsleeps\nsleeve\n"
    "slide\nslides\nslideshow\nslight\nslightly\nslim\nslip\nslope\nslot\nslots\nslovak\nslovakia\n"
    "slovenia\nslow\nslowly\nslut\nsluts\nsm\nsmall\nsmaller\nsmallest\nsmart\nsmell\nsmile\n"
    "smilies\nsmith\nsmithsonian\nsmoke\nsmoking\nsmooth\nsms\nsmtp\nsn\nsnake\nsnap\nsnapshot\n"
    "snow\nsnowboard\nso\nsoa\nsoap\nsoc\nsoccer\nsocial\nsocieties\nsociety\nsociology\nsocket\n"
    "socks\nsodium\nsofa\nsoft\nsoftball\nsoftware\nsoil\nsol\nsolar\nsolaris\nsold\nsoldier\n"
    "soldiers\nsole\nsolely\nsolid\nsolo\nsolomon\nsolution\nsolutions\nsolve\nsolved\nsolving\nsoma\n"
    "somalia\nsome\nsomebody\nsomehow\nsomeone\nsomerset\nsomething\nsometimes\nsomewhat\nsomewhere\nson\nsong\n"
    "songs\nsonic\nsons\nsony\nsoon\nsoonest\nsophisticated\nsorry\nsort\nsorted\nsorts\nsought\n"
    "soul\nsouls\nsound\nsounds\nsoundtrack\nsoup\nsource\nsources\nsouth\nsouthampton\nsoutheast\nsouthern\n"
    "southwest\nsoviet\nsox\nsp\nspa\nspace\nspaces\nspain\nspam\nspan\nspanish\nspank\n"
    "spanking\nsparc\nspare\nspas\nspatial\nspeak\nspeaker\nspeakers\nspeaking\nspeaks\nspears\nspec\n"
    "special\nspecialist\nspecialists\nspecialized\nspecializing\nspecially\nspecials\nspecialties\nspecialty\nspecies\nspecific\nspecifically\n"
    "specification\nspecifications\nspecifics\nspecified\nspecifies\nspecify\nspecs\nspectacular\nspectrum\nspeech\nspeeches\nspeed\n"
    "speeds\nspell\nspelling\nspencer\nspend\nspending\nspent\nsperm\nsphere\nspice\nspider\nspies\n"
    "spin\nspine\nspiral\nspirit\nspirits\nspiritual\nspirituality\nsplit\nspoke\nspoken\nspokesman\nsponsor\n"
    "sponsored\nsponsors\nsponsorship\nsport\nsporting\nsports\nspot\nspotlight\nspots\nspouse\nspray\nspread\n"
    "spreading\nspring\nspringer\nspringfield\nsprings\nsprint\nspy\nspyware\nsq\nsql\nsquad\nsquare\n"
    "squirt\nsquirting\nsr\nsrc\nsri\nss\nssl\nst\nstability\nstable\nstack\nstadium\n"
    "staff\nstaffing\nstage\nstages\nstainless\nstake\nstakeholders\nstamp\nstamps\nstan\nstand\nstandard\n"
    "standards\nstanding\nstandings\nstands\nstanford\nstanley\nstar\nstarring\nstars\nstarsmerchant\nstart\nstarted\n"
    "starter\nstarting\nstarts\nstartup\nstat\nstate\nstated\nstatement\nstatements\nstates\nstatewide\nstatic\n"
    "stating\nstation\nstationery\nstations\nstatistical\nstatistics\nstats\nstatus\nstatute\nstatutes\nstatutory\nstay\n"
    "stayed\nstaying\nstays\nstd\nste\nsteady\nsteal\nsteam\nsteel\nsteering\nstem\nstep\n"
    "stephanie\nstephen\nsteps\nstereo\nsterling\nsteve\nsteven\nstevens\nstewart\nstick\nsticker\nstickers\n"
    "sticks\nsticky\nstill\nstock\nstockholm\nstockings\nstocks\nstolen\nstomach\nstone\nstones\nstood\n"
    "stop\nstopped\nstopping\nstops\nstorage\nstore\nstored\nstores\nstories\nstorm\nstory\nstr\n"
    "straight\nstrain\nstrand\nstrange\nstranger\nstrap\nstrategic\nstrategies\nstrategy\nstream\nstreaming\nstreams\n"
    "street\nstreets\nstrength\nstrengthen\nstrengthening\nstrengths\nstress\nstretch\nstrict\nstrictly\nstrike\nstrikes\n"
    "striking\nstring\nstrings\nstrip\nstripes\nstrips\nstroke\nstrong\nstronger\nstrongly\nstruck\nstruct\n"
    "structural\nstructure\nstructured\nstructures\nstruggle\nstuart\nstuck\nstud\nstudent\nstudents\nstudied\nstudies\n"
    "studio\nstudios\nstudy\nstudying\nstuff\nstuffed\nstunning\nstupid\nstyle\nstyles\nstylish\nstylus\n"
    "su\nsub\nsubaru\nsubcommittee\nsubdivision\nsubject\nsubjective\nsubjects\nsublime\nsublimedirectory\nsubmission\nsubmissions\n"
    "submit\nsubmitted\nsubmitting\nsubscribe\nsubscriber\nsubscribers\nsubscription\nsubscriptions\nsubsection\nsubsequent\nsubsequently\nsubsidiaries\n"
    "subsidiary\nsubstance\nsubstances\nsubstantial\nsubstantially\nsubstitute\nsubtle\nsuburban\nsucceed\nsuccess\nsuccessful\nsuccessfully\n"
    "such\nsuck\nsucking\nsucks\nsudan\nsudden\nsuddenly\nsue\nsuffer\nsuffered\nsuffering\nsufficient\n"
    "sufficiently\nsugar\nsuggest\nsuggested\nsuggesting\nsuggestion\nsuggestions\nsuggests\nsuicide\nsuit\nsuitable\nsuite\n"
    "suited\nsuites\nsuits\nsullivan\nsum\nsummaries\nsummary\nsummer\nsummit\nsun\nsunday\nsunglasses\n"
    "sunny\nsunrise\nsunset\nsunshine\nsuper\nsuperb\nsuperintendent\nsuperior\nsupervision\nsupervisor\nsupervisors\nsupplement\n"
    "supplemental\nsupplements\nsupplied\nsupplier\nsuppliers\nsupplies\nsupply\nsupport\nsupported\nsupporters\nsupporting\nsupports\n"
    "suppose\nsupposed\nsupreme\nsur\nsure\nsurely\nsurf\nsurface\nsurfaces\nsurfing\nsurge\nsurgeon\n"
    "surgeons\nsurgery\nsurgical\nsurname\nsurplus\nsurprise\nsurprised\nsurprising\nsurrey\nsurround\nsurrounded\nsurrounding\n"
    "surveillance\nsurvey\nsurveys\nsurvival\nsurvive\nsurvivor\nsurvivors\nsusan\nsuse\nsuspect\nsuspected\nsuspended\n"
    "suspension\nsussex\nsustainability\nsustainable\nsustained\nsuzuki\nsv\nsw\nswap\nswaziland\nsweden\nswedish\n"
    "sweet\nswift\nswim\nswimming\nswing\nswingers\nswiss\nswitch\nswitched\nswitches\nswitching\nswitzerland\n"
    "sword\nsydney\nsymantec\nsymbol\nsymbols\nsympathy\nsymphony\nsymposium\nsymptoms\nsync\nsynchronize\nsyndicate\n"
    "syndication\nsyndrome\nsynopsis\nsyntax\nsynthesis\nsynthetic\nsyracuse\nsyria\nsys\nsystem\nsystematic\nsystems\n"
    "t\nta\ntab\ntable\ntables\ntablet\ntablets\ntabs\ntackle\ntactics\ntag\ntagged\n"
    "tags\ntahoe\ntail\ntaiwan\ntake\ntaken\ntakes\ntaking\ntale\ntalent\ntalented\ntales\n"
    "talk\ntalked\ntalking\ntalks\ntall\ntamil\ntampa\ntan\ntank\ntanks\ntanzania\ntap\n"
    "tape\ntapes\ntar\ntarget\ntargeted\ntargets\ntariff\ntask\ntasks\ntaste\ntattoo\ntaught\n"
    "tax\ntaxation\ntaxes\ntaxi\ntaylor\ntb\ntba\ntc\ntcp\ntd\nte\ntea\n"
    "teach\nteacher\nteachers\nteaches\nteaching\nteam\nteams\ntear\ntears\ntech\ntechnical\ntechnician\n"
    "technique\ntechniques\ntechno\ntechnological\ntechnologies\ntechnology\ntechrepublic\nted\nteddy\ntee\nteen\nteenage\n"
    "teens\nteeth\ntel\ntelecharger\ntelecom\ntelecommunications\ntelephone\ntelephony\ntelescope\ntelevision\ntelevisions\ntell\n"
    "telling\ntells\ntemp\ntemperature\ntemperatures\ntemplate\ntemplates\ntemple\ntemporal\ntemporarily\ntemporary\nten\n"
    "tenant\ntend\ntender\ntennessee\ntennis\ntension\ntent\nterm\nterminal\nterminals\ntermination\nterminology\n"
    "terms\nterrace\nterrain\nterrible\nterritories\nterritory\nterror\nterrorism\nterrorist\nterrorists\nterry\ntest\n"
    "testament\ntested\ntestimonials\ntestimony\ntesting\ntests\ntex\ntexas\ntext\ntextbook\ntextbooks\ntextile\n"
    "textiles\ntexts\ntexture\ntf\ntft\ntgp\nth\nthai\nthailand\nthan\nthank\nthanks\n"
    "thanksgiving\nthat\nthats\nthe\ntheater\ntheaters\ntheatre\nthee\ntheft\nthehun\ntheir\nthem\n"
    "theme\nthemes\nthemselves\nthen\ntheology\ntheorem\ntheoretical\ntheories\ntheory\ntherapeutic\ntherapist\ntherapy\n"
    "there\nthereafter\nthereby\ntherefore\nthereof\nthermal\nthesaurus\nthese\nthesis\ntheta\nthey\nthick\n"
    "thickness\nthin\nthing\nthings\nthink\nthinking\nthinkpad\nthinks\nthird\nthirty\nthis\nthomas\n"
    "thompson\nthomson\nthong\nthongs\nthorough\nthoroughly\nthose\nthou\nthough\nthought\nthoughts\nthousand\n"
    "thousands\nthread\nthreaded\nthreads\nthreat\nthreatened\nthreatening\nthreats\nthree\nthreesome\nthreshold\nthriller\n"
    "throat\nthrough\nthroughout\nthrow\nthrowing\nthrown\nthrows\nthru\nthu\nthumb\nthumbnail\nthumbnails\n"
    "thumbs\nthumbzilla\nthunder\nthursday\nthus\nthy\nti\nticket\ntickets\ntide\ntie\ntied\n"
    "tier\nties\ntiffany\ntiger\ntigers\ntight\ntil\ntile\ntiles\ntill\ntim\ntimber\n"
    "time\ntimeline\ntimely\ntimer\ntimes\ntiming\ntimothy\ntin\ntiny\ntion\ntions\ntip\n"
    "tips\ntire\ntired\ntires\ntissue\ntit\ntitanium\ntitans\ntitle\ntitled\ntitles\ntits\n"
    "titten\ntm\ntmp\ntn\nto\ntobacco\ntobago\ntoday\ntodd\ntoddler\ntoe\ntogether\n"
    "toilet\ntoken\ntokenize\ntokyo\ntold\ntolerance\ntoll\ntom\ntomato\ntomatoes\ntommy\ntomorrow\n"
    "ton\ntone\ntoner\ntones\ntongue\ntonight\ntons\ntony\ntoo\ntook\ntool\ntoolbar\n"
    "toolbox\ntoolkit\ntools\ntooth\ntop\ntopic\ntopics\ntopless\ntops\ntoronto\ntorture\ntoshiba\n"
    "total\ntotally\ntotals\ntouch\ntouched\ntough\ntour\ntouring\ntourism\ntourist\ntournament\ntournaments\n"
    "tours\ntoward\ntowards\ntower\ntowers\ntown\ntowns\ntownship\ntoxic\ntoy\ntoyota\ntoys\n"
    "tp\ntr\ntrace\ntrack\ntrackback\ntrackbacks\ntracked\ntracker\ntracking\ntracks\ntract\ntractor\n"
    "tracy\ntrade\ntrademark\ntrademarks\ntrader\ntrades\ntrading\ntradition\ntraditional\ntraditions\ntraffic\ntragedy\n"
    "trail\ntrailer\ntrailers\ntrails\ntrain\ntrained\ntrainer\ntrainers\ntraining\ntrains\ntramadol\ntrance\n"
    "tranny\ntrans\ntransaction\ntransactions\ntranscript\ntranscription\ntranscripts\ntransexual\ntransexuales\ntransfer\ntransferred\ntransfers\n"
    "transform\ntransformation\ntransit\ntransition\ntranslate\ntranslated\ntranslation\ntranslations\ntranslator\ntransmission\ntransmit\ntransmitted\n"
    "transparency\ntransparent\ntransport\ntransportation\ntranssexual\ntrap\ntrash\ntrauma\ntravel\ntraveler\ntravelers\ntraveling\n"
    "traveller\ntravelling\ntravels\ntravesti\ntravis\ntray\ntreasure\ntreasurer\ntreasures\ntreasury\ntreat\ntreated\n"
    "treating\ntreatment\ntreatments\ntreaty\ntree\ntrees\ntrek\ntrembl\ntremendous\ntrend\ntrends\ntreo\n"
    "tri\ntrial\ntrials\ntriangle\ntribal\ntribe\ntribes\ntribunal\ntribune\ntribute\ntrick\ntricks\n"
    "tried\ntries\ntrigger\ntrim\ntrinidad\ntrinity\ntrio\ntrip\ntripadvisor\ntriple\ntrips\ntriumph\n"
    "trivia\ntroops\ntropical\ntrouble\ntroubleshooting\ntrout\ntroy\ntruck\ntrucks\ntrue\ntruly\ntruncate\n"
    "trunk\ntrust\ntrusted\ntrustee\ntrustees\ntrusts\ntruth\ntry\ntrying\nts\ntsunami\ntt\n"
    "tu\ntub\ntube\ntubes\ntucson\ntue\ntuesday\ntuition\ntulsa\ntumor\ntune\ntuner\n"
    "tunes\ntuning\ntunisia\ntunnel\nturbo\nturkey\nturkish\nturn\nturned\nturner\nturning\nturns\n"
    "turtle\ntutorial\ntutorials\ntv\ntvs\ntwelve\ntwenty\ntwice\ntwiki\ntwin\ntwinks\ntwins\n"
    "twist\ntwisted\ntwo\ntx\nty\ntyler\ntype\ntypes\ntypewriter\ntypical\ntypically\ntyping\n"
    "u\nuc\nuganda\nugly\nuh\nui\nuk\nukraine\nul\nultimate\nultimately\nultra\n"
    "ultram\num\nun\nuna\nunable\nunauthorized\nunavailable\nuncertainty\nuncle\nund\nundefined\nunder\n"
    "undergraduate\nunderground\nunderlying\nunderstand\nunderstanding\nunderstood\nundertake\nundertaken\nunderwear\nundo\nune\nunemployment\n"
    "unexpected\nunfortunately\nuni\nunified\nuniform\nunion\nunions\nuniprotkb\nunique\nunit\nunited\nunits\n"
    "unity\nuniv\nuniversal\nuniverse\nuniversities\nuniversity\nunix\nunknown\nunless\nunlike\nunlikely\nunlimited\n"
    "unlock\nunnecessary\nunsigned\nunsubscribe\nuntil\nuntitled\nunto\nunusual\nunwrap\nup\nupc\nupcoming\n"
    "update\nupdated\nupdates\nupdating\nupgrade\nupgrades\nupgrading\nupload\nuploaded\nupon\nupper\nups\n"
    "upset\nupskirt\nupskirts\nur\nurban\nurge\nurgent\nuri\nurl\nurls\nuruguay\nurw\n"
    "us\nusa\nusage\nusb\nusc\nusd\nusda\nuse\nused\nuseful\nuser\nusername\n"
    "users\nuses\nusgs\nusing\nusps\nusr\nusual\nusually\nut\nutah\nutc\nutilities\n"
    "utility\nutilization\nutilize\nutils\nuv\nuw\nuzbekistan\nv\nva\nvacancies\nvacation\nvacations\n"
    "vaccine\nvacuum\nvagina\nval\nvalentine\nvalid\nvalidation\nvalidity\nvalium\nvalley\nvaluable\nvaluation\n"
    "value\nvalued\nvalues\nvalve\nvalves\nvampire\nvan\nvancouver\nvanilla\nvar\nvariable\nvariables\n"
    "variance\nvariation\nvariations\nvaried\nvaries\nvarieties\nvariety\nvarious\nvary\nvarying\nvast\nvat\n"
    "vatican\nvault\nvb\nvbulletin\nvc\nvcr\nve\nvector\nvegas\nvegetable\nvegetables\nvegetarian\n"
    "vegetation\nvehicle\nvehicles\nvelocity\nvelvet\nvendor\nvendors\nvenezuela\nvenice\nventure\nventures\nvenue\n"
    "venues\nver\nverbal\nverde\nverification\nverified\nverify\nverizon\nvermont\nvernon\nverse\nversion\n"
    "versions\nversus\nvertex\nvertical\nvery\nverzeichnis\nvessel\nvessels\nveteran\nveterans\nveterinary\nvg\n"
    "vhs\nvi\nvia\nviagra\nvibrator\nvibrators\nvic\nvice\nvictim\nvictims\nvictor\nvictoria\n"
    "victorian\nvictory\nvid\nvideo\nvideos\nvids\nvienna\nvietnam\nvietnamese\nview\nviewed\nviewer\n"
    "viewers\nviewing\nviewpicture\nviews\nvii\nviii\nviking\nvilla\nvillage\nvillages\nvillas\nvincent\n"
    "vintage\nvinyl\nviolation\nviolations\nviolence\nviolent\nviolin\nvip\nviral\nvirgin\nvirginia\nvirtual\n"
    "virtually\nvirtue\nvirus\nviruses\nvisa\nvisibility\nvisible\nvision\nvisit\nvisited\nvisiting\nvisitor\n"
    "visitors\nvisits\nvista\nvisual\nvital\nvitamin\nvitamins\nvocabulary\nvocal\nvocals\nvocational\nvoice\n"
    "voices\nvoid\nvoip\nvol\nvolkswagen\nvolleyball\nvolt\nvoltage\nvolume\nvolumes\nvoluntary\nvolunteer\n"
    "volunteers\nvolvo\nvon\nvote\nvoted\nvoters\nvotes\nvoting\nvoyeur\nvoyeurweb\nvoyuer\nvp\n"
    "vpn\nvs\nvsnet\nvt\nvulnerability\nvulnerable\nw\nwa\nwage\nwages\nwagner\nwagon\n"
    "wait\nwaiting\nwaiver\nwake\nwal\nwales\nwalk\nwalked\nwalker\nwalking\nwalks\nwall\n"
    "wallace\nwallet\nwallpaper\nwallpapers\nwalls\nwalnut\nwalt\nwalter\nwan\nwang\nwanna\nwant\n"
    "wanted\nwanting\nwants\nwar\nwarcraft\nward\nware\nwarehouse\nwarm\nwarming\nwarned\nwarner\n"
    "warning\nwarnings\nwarrant\nwarranties\nwarranty\nwarren\nwarrior\nwarriors\nwars\nwas\nwash\nwasher\n"
    "washing\nwashington\nwaste\nwatch\nwatched\nwatches\nwatching\nwater\nwaterproof\nwaters\nwatershed\nwatson\n"
    "watt\nwatts\nwav\nwave\nwaves\nwax\nway\nwayne\nways\nwb\nwc\nwe\n"
    "weak\nwealth\nweapon\nweapons\nwear\nwearing\nweather\nweb\nwebcam\nwebcams\nwebcast\nweblog\n"
    "weblogs\nwebmaster\nwebmasters\nwebpage\nwebshots\nwebsite\nwebsites\nwebster\nwed\nwedding\nweddings\nwednesday\n"
    "weed\nweek\nweekend\nweekends\nweekly\nweeks\nweight\nweighted\nweights\nweird\nwelcome\nwelding\n"
    "welfare\nwell\nwellington\nwellness\nwells\nwelsh\nwendy\nwent\nwere\nwesley\nwest\nwestern\n"
    "westminster\nwet\nwhale\nwhat\nwhatever\nwhats\nwheat\nwheel\nwheels\nwhen\nwhenever\nwhere\n"
    "whereas\nwherever\nwhether\nwhich\nwhile\nwhilst\nwhite\nwho\nwhole\nwholesale\nwhom\nwhore\n"
    "whose\nwhy\nwi\nwichita\nwicked\nwide\nwidely\nwider\nwidescreen\nwidespread\nwidth\nwife\n"
    "wifi\nwiki\nwikipedia\nwild\nwilderness\nwildlife\nwiley\nwill\nwilliam\nwilliams\nwilling\nwillow\n"
    "wilson\nwin\nwind\nwindow\nwindows\nwinds\nwindsor\nwine\nwines\nwing\nwings\nwinner\n"
    "winners\nwinning\nwins\nwinston\nwinter\nwire\nwired\nwireless\nwires\nwiring\nwisconsin\nwisdom\n"
    "wise\nwish\nwishes\nwishing\nwishlist\nwit\nwitch\nwith\nwithdrawal\nwithin\nwithout\nwitness\n"
    "witnesses\nwives\nwizard\nwm\nwma\nwn\nwolf\nwoman\nwomen\nwomens\nwon\nwonder\n"
    "wonderful\nwondering\nwood\nwooden\nwoods\nwool\nworcester\nword\nwordpress\nwords\nwork\nworked\n"
    "worker\nworkers\nworkflow\nworkforce\nworking\nworkout\nworkplace\nworks\nworkshop\nworkshops\nworkstation\nworld\n"
    "worldcat\nworlds\nworldsex\nworldwide\nworm\nworn\nworried\nworry\nworse\nworship\nworst\nworth\n"
    "worthy\nwould\nwound\nwow\nwp\nwr\nwrap\nwrapped\nwrapping\nwrestling\nwright\nwrist\n"
    "write\nwriter\nwriters\nwrites\nwriting\nwritings\nwritten\nwrong\nwrote\nws\nwt\nwto\n"
    "wu\nwv\nww\nwww\nwx\nwy\nwyoming\nx\nxanax\nxbox\nxerox\nxhtml\n"
    "xi\nxl\nxml\nxnxx\nxp\nxx\nxxx\ny\nya\nyacht\nyahoo\nyale\n"
    "yamaha\nyang\nyard\nyards\nyarn\nye\nyea\nyeah\nyear\nyearly\nyears\nyeast\n"
    "yellow\nyemen\nyen\nyes\nyesterday\nyet\nyield\nyields\nyn\nyo\nyoga\nyork\n"
    "yorkshire\nyou\nyoung\nyounger\nyour\nyours\nyourself\nyouth\nyr\nyrs\nyu\nyugoslavia\n"
    "yukon\nz\nza\nzambia\nzdnet\nzealand\nzen\nzero\nzimbabwe\nzinc\nzip\nzoloft\n"
    "zone\nzones\nzoning\nzoo\nzoom\nzoophilia\nzope\nzshops\nzu\nzum\nzus\n"
;

}  // namespace softcloud::detail
